// Acceptance suite: one PASS/FAIL line per primary criterion.
//
// Usage: acceptance [--quick]. --quick shortens criterion 1 to the 20x200
// run only; every other check is unchanged.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "iswe/lagrangian_eulerian.hpp"
#include "iswe/scalar_monotone.hpp"
#include "iswe/simulation_driver.hpp"

using namespace iswe;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void info(const std::string& what) {
    std::printf("    info: %s\n", what.c_str());
    std::fflush(stdout);
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, static_cast<double>(args)...);
    return buf;
}

// 1. Lake at rest on the parabola: late-time source norms.
double late_source_norm(int nx, int ny) {
    const TestCase tc = find_case("parabola");
    RunConfig rc;
    rc.nx = nx;
    rc.ny = ny;
    rc.cfl = tc.cfl;
    rc.t_end = 50.0;
    rc.diag_interval = 1;
    const RunResult r = run(tc, rc);
    double worst = 0.0;
    for (const auto& d : r.series)
        if (d.t >= 25.0) worst = std::max(worst, d.l1_s2 + d.l1_s3);
    return worst;
}

void criterion1(bool quick) {
    const auto t0 = std::chrono::steady_clock::now();
    const double coarse = late_source_norm(20, 200);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = coarse <= 1e-2;
    std::string what = fmt("parabola 20x200 max_{t in [25,50]} |S2|+|S3| = %.3e (<= 1e-2, %.0f s)", coarse, secs);
    if (!quick) {
        const auto t1 = std::chrono::steady_clock::now();
        const double fine = late_source_norm(40, 400);
        const double s1 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
        pass = pass && fine <= 1e-3;
        what += fmt("; 40x400 = %.3e (<= 1e-3, %.0f s)", fine, s1);
    } else {
        what += "; 40x400 skipped (--quick)";
    }
    report(1, pass, what);
}

// 2. Flat bottom at rest stays at rest.
void criterion2() {
    TestCase tc = find_case("slope");
    tc.surface = flat_surface(1.0);
    tc.domain = {0, 1, 0, 1};
    tc.initial = [](double, double) { return ConservedState{1.0, 0.0, 0.0}; };
    RunConfig rc;
    rc.nx = rc.ny = 20;
    rc.cfl = 0.45;
    rc.t_end = 1e9;
    rc.max_steps = 1000;
    rc.diag_interval = 1000;
    const RunResult r = run(tc, rc);
    double worst = 0.0;
    for (int j = 0; j < rc.ny; ++j)
        for (int i = 0; i < rc.nx; ++i)
            worst = std::max({worst, std::abs(r.U(0, i, j) - 1.0), std::abs(r.U(1, i, j)), std::abs(r.U(2, i, j))});
    report(2, worst <= 1e-13 && r.last.steps == 1000,
           fmt("flat rest state, %.0f steps, max deviation %.3e (<= 1e-13)", double(r.last.steps), worst));
}

// 3. Mass conservation on every catalog case with walls on all sides.
void criterion3() {
    bool pass = true;
    double worst = 0.0;
    std::string names;
    for (TestCase tc : catalog()) {
        tc.boundary = BoundarySpec{};
        const double Lx = tc.domain.xmax - tc.domain.xmin, Ly = tc.domain.ymax - tc.domain.ymin;
        const double h = std::max(Lx, Ly) / 100.0;
        RunConfig rc;
        rc.nx = int(std::lround(Lx / h));
        rc.ny = int(std::lround(Ly / h));
        rc.cfl = tc.cfl;
        rc.t_end = 1e9;
        rc.max_steps = 500;
        rc.diag_interval = 1;
        const RunResult r = run(tc, rc);
        const double m0 = r.series.front().mass;
        double drift = 0.0;
        for (const auto& d : r.series) drift = std::max(drift, std::abs(d.mass - m0) / m0);
        pass = pass && drift <= 1e-12 && r.last.steps == 500;
        worst = std::max(worst, drift);
        names += " " + tc.name + fmt("=%.1e", drift);
    }
    report(3, pass, fmt("5 cases x 500 steps, worst relative drift %.3e (<= 1e-12):", worst) + names);
}

// 4. Full pipeline against the monotone conservative form, plus consistency.
ScalarGrid random_grid(int n, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> U(lo, hi);
    ScalarGrid g{n, n, std::vector<double>(static_cast<std::size_t>(n) * n)};
    for (auto& v : g.u) v = U(rng);
    return g;
}

void criterion4() {
    const int n = 64, steps = 50;
    const double h = 1.0 / n, cfl = 0.45;
    const SchemeOptions opts = SchemeOptions::literal();
    std::mt19937_64 rng(20240501);
    double worst = 0.0;
    for (const auto& prob : {linear_advection(1.0, 0.5), burgers()}) {
        const double pi = std::numbers::pi;
        ScalarGrid g = random_grid(n, rng, -0.1, 0.1);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                g.at(i, j) += std::sin(2 * pi * i * h) * std::cos(2 * pi * j * h) + (i < n / 2 && j < n / 2);
        Field u = to_field(g);
        for (int s = 0; s < steps; ++s) {
            const StepResult le = scalar_le_step(u, prob, opts, h, cfl);
            const ScalarGrid mono = monotone_step(to_grid(u), prob, le.dt, h, opts.eps);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(le.U(0, i, j) - mono.at(i, j)));
            u = to_field(to_grid(le.U));
        }
    }

    // Consistency: constant data reproduce the physical flux.
    double cons = 0.0;
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int k = 0; k < 100; ++k) {
        const double c = U(rng);
        for (const auto& prob : {linear_advection(1.0, 0.5), burgers()}) {
            const ScalarGrid g{4, 4, std::vector<double>(16, c)};
            const MonotoneFluxes F = monotone_fluxes(g, prob, 0.1 * h, h);
            for (std::size_t q = 0; q < g.u.size(); ++q) {
                cons = std::max(cons, std::abs(F.F.u[q] - prob.f1(c)) / std::max(1.0, std::abs(prob.f1(c))));
                cons = std::max(cons, std::abs(F.G.u[q] - prob.f2(c)) / std::max(1.0, std::abs(prob.f2(c))));
            }
        }
    }
    report(4, worst <= 1e-12 && cons <= 1e-14,
           fmt("64x64 x 50 steps max |LE - monotone form| = %.3e (<= 1e-12); consistency error %.3e over 100 states",
               worst, cons));
}

// 5. No new extrema relative to the 3x3 neighbourhood of the evolved-cell
// averages U-bar, on the 3x3 gather projection. The default scatter
// projection and the count relative to u^n are reported alongside.
void criterion5() {
    const int n = 24;
    const double h = 1.0 / n, cfl = 0.45;
    SchemeOptions gather = SchemeOptions::literal();
    gather.projection = Projection::gather;
    gather.normalization = Normalization::stencil_sum;
    const SchemeOptions scatter = SchemeOptions::literal();
    std::mt19937_64 rng(7);
    int bad = 0, bad_scatter = 0, bad_un = 0;
    double worst = 0.0, worst_scatter = 0.0;
    for (int k = 0; k < 200; ++k) {
        const bool burg = k % 2 == 1;
        const ScalarModel model(burg ? burgers() : linear_advection(k % 4 == 0 ? 1.0 : -0.7, k % 3 == 0 ? 0.4 : -1.0));
        Field u = to_field(random_grid(n, rng, burg ? -1.0 : 0.0, 1.0));
        const FaceData faces = face_stage(u, model, gather);
        const double dt = compute_dt(faces, h, cfl, gather);
        const LagrangianField lag = lagrangian_step(u, faces, model, dt, h, h);
        const Field next = eulerian_projection(lag, faces, u, dt, h, h, gather);
        const MonotoneReport r = check_monotone(lag.ubar, next);
        bad += r.violations;
        worst = std::max(worst, r.worst);
        bad_un += check_monotone(u, next).violations;
        const MonotoneReport s = check_monotone(lag.ubar, eulerian_projection(lag, faces, u, dt, h, h, scatter));
        bad_scatter += s.violations;
        worst_scatter = std::max(worst_scatter, s.worst);
    }
    report(5, bad == 0,
           fmt("200 random fields at cfl 0.45, gather projection: %.0f values outside the U-bar neighbourhood "
               "(worst %.2e)",
               bad, worst));
    info(fmt("scatter projection: %.0f values outside the U-bar neighbourhood (worst %.2e)", bad_scatter,
             worst_scatter));
    info(fmt("gather projection, values outside the u^n neighbourhood: %.0f", bad_un));
}

// 6. Grid convergence.
void criterion6() {
    SchemeOptions first;
    const double e1 = stoker_l1_error(100, 0.45, first), e2 = stoker_l1_error(200, 0.45, first);
    const double p_sw = std::log2(e1 / e2);
    SchemeOptions muscl;
    muscl.reconstruction = Reconstruction::muscl;
    const double b1 = advected_bump_l1_error(64, 0.4, muscl), b2 = advected_bump_l1_error(128, 0.4, muscl);
    const double p_b = std::log2(b1 / b2);
    report(6, p_sw >= 0.7 && p_b >= 1.6,
           fmt("dam break 100->200 cells order %.3f (>= 0.7); MUSCL minmod smooth advection 64->128 order %.3f (>= 1.6)",
               p_sw, p_b));
    const double c1 = stoker_l1_error(100, 0.2, first), c2 = stoker_l1_error(200, 0.2, first);
    info(fmt("dam break at the slope-case cfl 0.20: order %.3f", std::log2(c1 / c2)));
}

// 7. Discrete intrinsic tensor divergence against an exact evaluation of the
// same expression (complex-step derivatives) on the parabola.
template <class T>
T B_y(T y) { return 0.08 * (y - 10.0); }
template <class T>
T h1(T, T) { return T(1.0); }
template <class T>
T h2(T, T y) { return std::sqrt(1.0 + B_y(y) * B_y(y)); }
template <class T>
T sqrt_g(int k, T x, T y) { return k == 0 ? T(1.0) : (k == 1 ? h1(x, y) : h2(x, y)); }

// Symmetric manufactured tensor, smooth and non-polynomial.
template <class T>
T tensor(int a, int b, T x, T y) {
    if (a > b) std::swap(a, b);
    const double k = 1.0 + a + 2.0 * b;
    return std::sin(k * x + 0.3 * y) * std::cos(0.7 * x - k * 0.5 * y) + 0.1 * (a + b) * x * y;
}

double exact_row(int c, double x, double y) {
    const double hs = 1e-30;
    using C = std::complex<double>;
    auto dx = [&](auto f) { return f(C(x, hs), C(y)).imag() / hs; };
    auto dy = [&](auto f) { return f(C(x), C(y, hs)).imag() / hs; };
    auto ds = [&](auto f) { return c == 1 ? dx(f) : (c == 2 ? dy(f) : 0.0); };
    const double w = h1(x, y) * h2(x, y);
    const double div = (dx([&](C X, C Y) { return h1(X, Y) * h2(X, Y) * tensor(1, c, X, Y); }) +
                        dy([&](C X, C Y) { return h1(X, Y) * h2(X, Y) * tensor(2, c, X, Y); })) /
                       w;
    const double gc = sqrt_g(c, x, y);
    double r = div;
    r += (2 * tensor(1, c, x, y) * dx([&](C X, C Y) { return sqrt_g(c, X, Y); }) -
          tensor(1, 1, x, y) * h1(x, y) / gc * ds([&](C X, C Y) { return h1(X, Y); })) /
         gc;
    r += (2 * tensor(2, c, x, y) * dy([&](C X, C Y) { return sqrt_g(c, X, Y); }) -
          tensor(2, 2, x, y) * h2(x, y) / gc * ds([&](C X, C Y) { return h2(X, Y); })) /
         gc;
    return r;
}

double operator_residual(int n) {
    const Domain d{0.0, 2.0, 1.0, 3.0};
    const MetricGrid G = build_metric_grid(parabola_surface(), d, n, n);
    TensorField T;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            T[a][b] = Array2<double>(n, n, G.ng, 0.0);
            for (int j = -G.ng; j < n + G.ng; ++j)
                for (int i = -G.ng; i < n + G.ng; ++i) T[a][b](i, j) = tensor(a, b, G.xc(i), G.yc(j));
        }
    }
    const VectorField r = intrinsic_div_tensor(T, G);
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(r[c](i, j) - exact_row(c, G.xc(i), G.yc(j))));
    return worst;
}

void criterion7() {
    const double r16 = operator_residual(16), r32 = operator_residual(32), r64 = operator_residual(64);
    const double p1 = std::log2(r16 / r32), p2 = std::log2(r32 / r64);
    report(7, std::min(p1, p2) >= 1.8,
           fmt("parabola tensor-divergence residual %.2e, %.2e, %.2e; orders %.3f, %.3f (>= 1.8)", r16, r32, r64, p1, p2));
}

// 8. Stencil coefficients from random admissible speeds.
void criterion8() {
    std::mt19937_64 rng(8);
    const double dx = 0.1, dy = 0.1, dt = 0.01;
    // |v| dt <= 0.45 h keeps every draw admissible.
    std::uniform_real_distribution<double> V(-0.45 * dx / dt, 0.45 * dx / dt);
    double sum_err = 0.0, lo = 1.0, hi = 0.0;
    for (int k = 0; k < 100000; ++k) {
        const double vW = V(rng), vE = V(rng), vS = V(rng), vN = V(rng);
        for (const Weights3& w : {normalized(projection_stencil(vW, vE, vS, vN, dt, dx, dy), Normalization::stencil_sum),
                                  scatter_weights(vW, vE, vS, vN, dt, dx, dy)}) {
            double s = 0.0;
            for (const auto& row : w)
                for (double c : row) {
                    s += c;
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
            sum_err = std::max(sum_err, std::abs(s - 1.0));
        }
    }
    bool ident = true;
    for (const Weights3& w : {normalized(projection_stencil(0, 0, 0, 0, dt, dx, dy), Normalization::stencil_sum),
                              scatter_weights(0, 0, 0, 0, dt, dx, dy)})
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) ident = ident && w[a][b] == (a == 1 && b == 1 ? 1.0 : 0.0);
    report(8, lo >= 0.0 && hi <= 1.0 && sum_err <= 1e-14 && ident,
           fmt("1e5 draws: coefficients in [%.3g, %.3g], max |sum - 1| = %.2e (<= 1e-14), zero speed identity: ", lo,
               hi, sum_err) +
               (ident ? "yes" : "no"));
}

// 9. No overshoot along the symmetry line at the benchmark times.
class LineMax : public RunObserver {
public:
    LineMax(bool along_x, double level) : along_x_(along_x), level_(level) {}
    void snapshot(double t, const Field& U, const MetricGrid& G) override {
        double m = 0.0;
        // The symmetry line falls on a face between two cells; check both.
        if (along_x_) {
            for (int i = 0; i < G.nx; ++i)
                for (int j : {G.ny / 2 - 1, G.ny / 2}) m = std::max(m, U(0, i, j));
        } else {
            for (int j = 0; j < G.ny; ++j)
                for (int i : {G.nx / 2 - 1, G.nx / 2}) m = std::max(m, U(0, i, j));
        }
        worst = std::max(worst, m - level_);
        times.push_back(t);
    }
    void diagnostics(const Diagnostics&) override {}
    double worst = -1e300;
    std::vector<double> times;

private:
    bool along_x_;
    double level_;
};

void criterion9() {
    struct Spec {
        const char* name;
        int nx, ny;
        bool along_x;
    };
    bool pass = true;
    std::string what;
    for (const Spec& s : {Spec{"slope", 60, 600, false}, Spec{"bump", 60, 60, true}, Spec{"cubic3d", 60, 150, false}}) {
        const TestCase tc = find_case(s.name);
        RunConfig rc;
        rc.nx = s.nx;
        rc.ny = s.ny;
        rc.cfl = tc.cfl;
        rc.t_end = tc.reference_times.back();
        rc.output_times = tc.reference_times;
        rc.diag_interval = 1 << 30;
        LineMax obs(s.along_x, 2.0);
        run(tc, rc, &obs);
        pass = pass && obs.worst <= 1e-6;
        what += " " + std::string(s.name) + fmt(" %.0fx%.0f: max eta - max(IC) = %.3e;", s.nx, s.ny, obs.worst);
    }
    report(9, pass, "symmetry-line overshoot at the benchmark times (<= 1e-6):" + what);
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    criterion1(quick);
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
