#include "iswe/simulation_driver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "iswe/scalar_monotone.hpp"

namespace iswe {

namespace {

ConservedState rest(double eta) { return {eta, 0.0, 0.0}; }

}  // namespace

std::vector<TestCase> catalog() {
    std::vector<TestCase> cases;

    TestCase slope;
    slope.name = "slope";
    slope.surface = slope_surface();
    slope.domain = {0, 1, 0, 10};
    slope.initial = [](double, double y) { return rest(y < 2.0 ? 2.0 : 1.0); };
    slope.cfl = 0.20;
    slope.nx = 40;
    slope.ny = 400;
    slope.reference_times = {0.5, 1.0, 1.5};
    cases.push_back(slope);

    TestCase parabola = slope;
    parabola.name = "parabola";
    parabola.surface = parabola_surface();
    parabola.cfl = 0.30;
    parabola.reference_times = {0.3, 0.6, 0.9};
    cases.push_back(parabola);

    TestCase bump;
    bump.name = "bump";
    bump.surface = bump_surface();
    bump.domain = {-3, 3, -3, 3};
    bump.initial = [](double x, double y) { return rest(x * x + y * y < 0.25 ? 2.0 : 1.0); };
    bump.cfl = 0.30;
    bump.nx = 40;
    bump.ny = 40;
    bump.reference_times = {0.2, 0.4, 0.6};
    cases.push_back(bump);

    TestCase cubic;
    cubic.name = "cubic3d";
    cubic.surface = cubic3d_surface();
    cubic.domain = {-4, 4, -10, 10};
    cubic.initial = [](double, double y) { return rest(y < -8.5 ? 2.0 : 1.0); };
    cubic.boundary.north = BoundaryKind::outlet;
    cubic.cfl = 0.30;
    cubic.nx = 40;
    cubic.ny = 100;
    cubic.reference_times = {0.8, 1.6, 2.4};
    cases.push_back(cubic);

    TestCase disc;
    disc.name = "slope_square_dam";
    disc.surface = surface_by_name("slope_square_dam");
    disc.domain = {0, 3, 0, 10};
    disc.initial = [](double x, double y) {
        double eta = y < 2.0 ? 2.0 : 1.0;
        const double dx = x - 1.5, dy = y - 5.0;
        if (std::abs(dx) < 0.5 || std::abs(dy) < 0.5) eta += std::max(0.0, 0.8 - dx * dx - dy * dy);
        return rest(eta);
    };
    disc.cfl = 0.20;
    disc.nx = 60;
    disc.ny = 200;
    for (int k = 1; k <= 11; ++k) disc.reference_times.push_back(0.1 * k);
    cases.push_back(disc);

    return cases;
}

TestCase find_case(const std::string& name) {
    for (auto& c : catalog())
        if (c.name == name) return c;
    throw ConfigError("unknown case '" + name + "'");
}

void apply_boundary(Field& U, const BoundarySpec& spec) {
    const int nx = U.nx(), ny = U.ny(), ng = U.ng();
    const bool mom = U.components() == 3;
    // x sides over the interior rows, then y sides over full rows so that
    // corner ghosts see both reflections.
    for (int j = 0; j < ny; ++j) {
        for (int k = 0; k < ng; ++k) {
            for (int c = 0; c < U.components(); ++c) {
                const bool flipw = mom && c == 1 && spec.west == BoundaryKind::noflow;
                const bool flipe = mom && c == 1 && spec.east == BoundaryKind::noflow;
                const int sw = spec.west == BoundaryKind::noflow ? k : 0;
                const int se = spec.east == BoundaryKind::noflow ? nx - 1 - k : nx - 1;
                U(c, -1 - k, j) = flipw ? -U(c, sw, j) : U(c, sw, j);
                U(c, nx + k, j) = flipe ? -U(c, se, j) : U(c, se, j);
            }
        }
    }
    for (int i = -ng; i < nx + ng; ++i) {
        for (int k = 0; k < ng; ++k) {
            for (int c = 0; c < U.components(); ++c) {
                const bool flips = mom && c == 2 && spec.south == BoundaryKind::noflow;
                const bool flipn = mom && c == 2 && spec.north == BoundaryKind::noflow;
                const int ss = spec.south == BoundaryKind::noflow ? k : 0;
                const int sn = spec.north == BoundaryKind::noflow ? ny - 1 - k : ny - 1;
                U(c, i, -1 - k) = flips ? -U(c, i, ss) : U(c, i, ss);
                U(c, i, ny + k) = flipn ? -U(c, i, sn) : U(c, i, sn);
            }
        }
    }
}

Field initial_field(const TestCase& tc, const MetricGrid& G) {
    Field U(3, G.nx, G.ny, G.ng);
    for (int j = 0; j < G.ny; ++j) {
        for (int i = 0; i < G.nx; ++i) {
            const auto s = tc.initial(G.xc(i), G.yc(j));
            for (int c = 0; c < 3; ++c) U(c, i, j) = s[c];
        }
    }
    return U;
}

double total_mass(const Field& U, const MetricGrid& G) {
    double m = 0.0;
    for (int j = 0; j < G.ny; ++j)
        for (int i = 0; i < G.nx; ++i) m += U(0, i, j);
    return m * G.dx * G.dy;
}

RunResult run(const TestCase& tc, const RunConfig& cfg, RunObserver* obs) {
    const MetricGrid G = build_metric_grid(tc.surface, tc.domain, cfg.nx, cfg.ny);
    return run_on(G, initial_field(tc, G), tc.boundary, cfg, obs);
}

RunResult run_on(const MetricGrid& G, Field U, const BoundarySpec& bc, const RunConfig& cfg, RunObserver* obs) {
    const IsweModel model(G, cfg.phys);
    const BoundaryFill fill = [&bc](Field& W) { apply_boundary(W, bc); };

    std::vector<double> outputs;
    for (double t : cfg.output_times)
        if (t > 0.0 && t < cfg.t_end) outputs.push_back(t);
    std::sort(outputs.begin(), outputs.end());
    std::size_t next_out = 0;

    RunResult res;
    Diagnostics d;
    d.mass = total_mass(U, G);
    res.series.push_back(d);
    if (obs) {
        obs->snapshot(0.0, U, G);
        obs->diagnostics(d);
    }

    double t = 0.0;
    long steps = 0;
    const double t_tol = 1e-12 * std::max(1.0, cfg.t_end);
    while (t < cfg.t_end - t_tol) {
        if (cfg.max_steps > 0 && steps >= cfg.max_steps) break;
        double target = cfg.t_end;
        if (next_out < outputs.size()) target = std::min(target, outputs[next_out]);

        StepResult sr;
        double scale = 1.0;
        for (int attempt = 0;; ++attempt) {
            try {
                sr = full_step(U, model, fill, cfg.scheme, G.dx, G.dy, cfg.cfl, 0.0, scale, target - t);
                break;
            } catch (const CflViolation& e) {
                if (attempt == 10)
                    throw StepFailure("step " + std::to_string(steps) + " at t=" + std::to_string(t) +
                                      " failed after 10 dt halvings: " + e.what());
                scale *= 0.5;
            }
        }

        double s2 = 0.0, s3 = 0.0;
        for (int j = 0; j < G.ny; ++j) {
            for (int i = 0; i < G.nx; ++i) {
                for (int c = 0; c < 3; ++c)
                    if (!std::isfinite(sr.U(c, i, j)))
                        throw StepFailure("non-finite state at step " + std::to_string(steps + 1));
                s2 += std::abs(sr.U(1, i, j) - U(1, i, j));
                s3 += std::abs(sr.U(2, i, j) - U(2, i, j));
            }
        }
        U = std::move(sr.U);
        ++steps;
        // Land exactly on output times.
        t = (std::abs(target - (t + sr.dt)) <= t_tol) ? target : t + sr.dt;

        d.t = t;
        d.mass = total_mass(U, G);
        d.l1_s2 = G.dx * G.dy * s2 / sr.dt;
        d.l1_s3 = G.dx * G.dy * s3 / sr.dt;
        d.max_speed = sr.max_speed;
        d.dt = sr.dt;
        d.steps = steps;
        const bool at_output = next_out < outputs.size() && t >= outputs[next_out] - t_tol;
        const bool done = t >= cfg.t_end - t_tol || (cfg.max_steps > 0 && steps >= cfg.max_steps);
        if (steps % std::max(cfg.diag_interval, 1) == 0 || done) {
            res.series.push_back(d);
            if (obs) obs->diagnostics(d);
        }
        if (at_output) {
            if (obs) obs->snapshot(t, U, G);
            ++next_out;
        }
    }
    if (obs && t > 0.0) obs->snapshot(t, U, G);
    res.last = d;
    res.U = std::move(U);
    return res;
}

double stoker_depth(double h_left, double h_right, double g, double xi) {
    const double cl = std::sqrt(g * h_left);
    // Middle depth from matching the rarefaction and shock velocities.
    auto mismatch = [&](double hm) {
        return 2.0 * (cl - std::sqrt(g * hm)) - (hm - h_right) * std::sqrt(g * (hm + h_right) / (2.0 * hm * h_right));
    };
    double lo = h_right, hi = h_left;
    for (int k = 0; k < 200 && hi - lo > 1e-15 * h_left; ++k) {
        const double mid = 0.5 * (lo + hi);
        (mismatch(mid) > 0.0 ? lo : hi) = mid;
    }
    const double hm = 0.5 * (lo + hi), cm = std::sqrt(g * hm);
    const double um = 2.0 * (cl - cm);
    const double shock = hm * um / (hm - h_right);
    if (xi < -cl) return h_left;
    if (xi < um - cm) return (2.0 * cl - xi) * (2.0 * cl - xi) / (9.0 * g);
    if (xi < shock) return hm;
    return h_right;
}

double stoker_l1_error(int ny, double cfl, const SchemeOptions& scheme) {
    TestCase tc = find_case("slope");
    tc.surface = flat_surface(1.0);
    const int nx = ny / 10;
    RunConfig rc;
    rc.nx = nx;
    rc.ny = ny;
    rc.cfl = cfl;
    rc.t_end = 0.5;
    rc.scheme = scheme;
    rc.diag_interval = 1 << 30;
    const MetricGrid G = build_metric_grid(tc.surface, tc.domain, nx, ny);
    const RunResult r = run_on(G, initial_field(tc, G), tc.boundary, rc);
    double err = 0.0;
    for (int j = 0; j < ny; ++j) {
        if (G.yc(j) <= 0.5) continue;
        const double exact = stoker_depth(2.0, 1.0, rc.phys.g, (G.yc(j) - 2.0) / rc.t_end);
        double row = 0.0;
        for (int i = 0; i < nx; ++i) row += r.U(0, i, j);
        err += std::abs(row / nx - exact) * G.dy;
    }
    return err;
}

double advected_bump_l1_error(int n, double cfl, const SchemeOptions& scheme) {
    const double pi = std::numbers::pi, h = 1.0 / n, t_end = 0.5;
    const ScalarProblem prob = linear_advection(1.0, 0.5);
    // Exact cell average of sin(2 pi x) sin(2 pi y) shrinks by this factor.
    const double damp = std::pow(std::sin(pi * h) / (pi * h), 2);
    auto exact = [&](int i, int j, double t) {
        return 2.0 + damp * std::sin(2 * pi * ((i + 0.5) * h - t)) * std::sin(2 * pi * ((j + 0.5) * h - 0.5 * t));
    };
    Field u(1, n, n, 3);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) u(0, i, j) = exact(i, j, 0.0);
    const long steps = std::lround(std::ceil(t_end / (cfl * h) - 1e-9));
    const double dt = t_end / steps;
    for (long k = 0; k < steps; ++k) u = scalar_le_step(u, prob, scheme, h, cfl, dt).U;
    double err = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) err += std::abs(u(0, i, j) - exact(i, j, t_end)) * h * h;
    return err;
}

}  // namespace iswe
