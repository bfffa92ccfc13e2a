#include "iswe/scalar_monotone.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace iswe {

ScalarProblem linear_advection(double ax, double ay) {
    return {"advection", [ax](double u) { return ax * u; }, [ax](double) { return ax; },
            [ay](double u) { return ay * u; }, [ay](double) { return ay; }};
}

ScalarProblem burgers() {
    auto f = [](double u) { return 0.5 * u * u; };
    auto df = [](double u) { return u; };
    return {"burgers", f, df, f, df};
}

void ScalarModel::face_flux(int dir, int, int, const double* Ue, double* F) const {
    F[0] = dir == 1 ? p_.f1(Ue[0]) : p_.f2(Ue[0]);
}

double ScalarModel::face_wave_speed(int dir, int, int, const double* UL, const double* UR) const {
    const auto& df = dir == 1 ? p_.df1 : p_.df2;
    return std::max(std::abs(df(UL[0])), std::abs(df(UR[0])));
}

void fill_periodic(Field& U) {
    const int nx = U.nx(), ny = U.ny(), ng = U.ng();
    auto wrap = [](int k, int n) { return ((k % n) + n) % n; };
    for (int c = 0; c < U.components(); ++c) {
        for (int j = -ng; j < ny + ng; ++j) {
            for (int i = -ng; i < nx + ng; ++i) {
                if (i >= 0 && i < nx && j >= 0 && j < ny) continue;
                U(c, i, j) = U(c, wrap(i, nx), wrap(j, ny));
            }
        }
    }
}

StepResult scalar_le_step(const Field& u, const ScalarProblem& prob, const SchemeOptions& opts, double h, double cfl,
                          double dt_fixed) {
    const ScalarModel model(prob);
    return full_step(u, model, fill_periodic, opts, h, h, cfl, dt_fixed);
}

ScalarGrid to_grid(const Field& u) {
    ScalarGrid g{u.nx(), u.ny(), std::vector<double>(static_cast<std::size_t>(u.nx()) * u.ny())};
    for (int j = 0; j < g.m; ++j)
        for (int i = 0; i < g.n; ++i) g.at(i, j) = u(0, i, j);
    return g;
}

Field to_field(const ScalarGrid& g, int ng) {
    Field u(1, g.n, g.m, ng);
    for (int j = 0; j < g.m; ++j)
        for (int i = 0; i < g.n; ++i) u(0, i, j) = g.at(i, j);
    fill_periodic(u);
    return u;
}

MonotoneFluxes monotone_fluxes(const ScalarGrid& u, const ScalarProblem& prob, double dt, double h, double eps) {
    const int n = u.n, m = u.m;
    ScalarGrid vx{n, m, std::vector<double>(u.u.size())}, vy = vx, rx = vx, ry = vx;

    // Face (i+1/2, j) stored at (i, j); same for (i, j+1/2).
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            const double ux = 0.5 * (u.at(i, j) + u.at(i + 1, j));
            const double fx = prob.f1(ux);
            vx.at(i, j) = fx * ux / (ux * ux + eps * eps);
            rx.at(i, j) = fx - ux * vx.at(i, j);
            const double uy = 0.5 * (u.at(i, j) + u.at(i, j + 1));
            const double fy = prob.f2(uy);
            vy.at(i, j) = fy * uy / (uy * uy + eps * eps);
            ry.at(i, j) = fy - uy * vy.at(i, j);
        }
    }

    // T[d][a][b]: content moved by donor d into its neighbour (a-1, b-1).
    std::vector<std::array<std::array<double, 3>, 3>> T(u.u.size());
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            const double vW = vx.at(i - 1, j), vE = vx.at(i, j), vS = vy.at(i, j - 1), vN = vy.at(i, j);
            const std::array<double, 3> Lx{std::max(-vW, 0.0) * dt,
                                           h - std::max(vW, 0.0) * dt + std::min(vE, 0.0) * dt,
                                           std::max(vE, 0.0) * dt};
            const std::array<double, 3> Ly{std::max(-vS, 0.0) * dt,
                                           h - std::max(vS, 0.0) * dt + std::min(vN, 0.0) * dt,
                                           std::max(vN, 0.0) * dt};
            const double M = u.at(i, j) * h * h -
                             dt * h * (rx.at(i, j) - rx.at(i - 1, j) + ry.at(i, j) - ry.at(i, j - 1));
            const double A = (Lx[0] + Lx[1] + Lx[2]) * (Ly[0] + Ly[1] + Ly[2]);
            auto& t = T[u.index(i, j)];
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) t[a][b] = M * ((Lx[a] * Ly[b]) / A);
        }
    }
    auto Tof = [&](int i, int j) -> const std::array<std::array<double, 3>, 3>& { return T[u.index(i, j)]; };

    MonotoneFluxes out{{n, m, std::vector<double>(u.u.size())}, {n, m, std::vector<double>(u.u.size())}};
    const double scale = 1.0 / (dt * h);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            double fx = 0.0;
            for (int b = 0; b < 3; ++b) fx += Tof(i, j)[2][b] - Tof(i + 1, j)[0][b];
            out.F.at(i, j) = fx * scale + rx.at(i, j);
            double gy = 0.0;
            for (int a = -1; a <= 1; ++a) gy += Tof(i + a, j)[1 - a][2] - Tof(i + a, j + 1)[1 - a][0];
            out.G.at(i, j) = gy * scale + ry.at(i, j);
        }
    }
    return out;
}

ScalarGrid monotone_step(const ScalarGrid& u, const ScalarProblem& prob, double dt, double h, double eps) {
    const auto fl = monotone_fluxes(u, prob, dt, h, eps);
    ScalarGrid out = u;
    const double lam = dt / h;
    for (int j = 0; j < u.m; ++j)
        for (int i = 0; i < u.n; ++i)
            out.at(i, j) = u.at(i, j) - lam * (fl.F.at(i, j) - fl.F.at(i - 1, j)) -
                           lam * (fl.G.at(i, j) - fl.G.at(i, j - 1));
    return out;
}

MonotoneReport check_monotone(const Field& before, const Field& after, double tol) {
    MonotoneReport r;
    for (int c = 0; c < after.components(); ++c) {
        for (int j = 0; j < after.ny(); ++j) {
            for (int i = 0; i < after.nx(); ++i) {
                double lo = before(c, i, j), hi = lo;
                for (int b = -1; b <= 1; ++b) {
                    for (int a = -1; a <= 1; ++a) {
                        lo = std::min(lo, before(c, i + a, j + b));
                        hi = std::max(hi, before(c, i + a, j + b));
                    }
                }
                const double v = after(c, i, j);
                const double excess = std::max(v - hi, lo - v);
                if (excess > tol) {
                    r.ok = false;
                    ++r.violations;
                    r.worst = std::max(r.worst, excess);
                }
            }
        }
    }
    return r;
}

}  // namespace iswe
