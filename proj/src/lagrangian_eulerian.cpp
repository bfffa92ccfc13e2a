#include "iswe/lagrangian_eulerian.hpp"

#include <algorithm>
#include <cmath>

#include "iswe/surface_geometry.hpp"

namespace iswe {

Projection parse_projection(const std::string& s) {
    if (s == "scatter") return Projection::scatter;
    if (s == "gather") return Projection::gather;
    throw ConfigError("projection: expected scatter|gather, got '" + s + "'");
}

Normalization parse_normalization(const std::string& s) {
    if (s == "stencil_sum") return Normalization::stencil_sum;
    if (s == "evolved_area") return Normalization::evolved_area;
    throw ConfigError("normalization: expected stencil_sum|evolved_area, got '" + s + "'");
}

SchemeOptions SchemeOptions::literal() {
    SchemeOptions o;
    o.theta = 0.0;
    o.clamp_speeds = false;
    return o;
}

namespace {

struct FaceStates {
    std::vector<double> L, R, e;
};

// Left/right/edge states of the face with low-side cell (il, jl) and
// high-side cell (ih, jh).
void face_states(const Field& U, const SlopeField* sl, const SchemeOptions& opts, int dir, int ih, int jh,
                 FaceStates& st) {
    const int nc = U.components();
    const int il = dir == 1 ? ih - 1 : ih;
    const int jl = dir == 1 ? jh : jh - 1;
    for (int c = 0; c < nc; ++c) {
        const double ul = U(c, il, jl), ur = U(c, ih, jh);
        switch (opts.reconstruction) {
            case Reconstruction::none:
                st.L[c] = ul;
                st.R[c] = ur;
                st.e[c] = 0.5 * (ul + ur);
                break;
            case Reconstruction::muscl: {
                const Field& d = dir == 1 ? sl->dx : sl->dy;
                const double dl = d(c, il, jl), dr = d(c, ih, jh);
                st.L[c] = ul + 0.5 * dl;
                st.R[c] = ur - 0.5 * dr;
                st.e[c] = muscl_interface(ul, ur, dl, dr);
                break;
            }
            case Reconstruction::p2: {
                auto cross = [&](int i, int j) {
                    return CrossStencil{U(c, i, j), U(c, i - 1, j), U(c, i + 1, j), U(c, i, j - 1), U(c, i, j + 1)};
                };
                const double hx = dir == 1 ? 1.0 : 0.0, hy = 1.0 - hx;
                st.L[c] = lagrange_p2(cross(il, jl), 0.5 * hx, 0.5 * hy, 1.0, opts.p2_center_fix);
                st.R[c] = lagrange_p2(cross(ih, jh), -0.5 * hx, -0.5 * hy, 1.0, opts.p2_center_fix);
                st.e[c] = 0.5 * (st.L[c] + st.R[c]);
                break;
            }
        }
    }
}

}  // namespace

FaceData face_stage(const Field& U, const FluxModel& model, const SchemeOptions& opts) {
    const int nc = U.components(), nx = U.nx(), ny = U.ny(), ng = U.ng();
    FaceData f;
    f.v.vx.assign(nc, Array2<double>(nx, ny, ng, 0.0));
    f.v.vy.assign(nc, Array2<double>(nx, ny, ng, 0.0));
    f.rx.assign(nc, Array2<double>(nx, ny, ng, 0.0));
    f.ry.assign(nc, Array2<double>(nx, ny, ng, 0.0));
    f.ax = Array2<double>(nx, ny, ng, 0.0);
    f.ay = Array2<double>(nx, ny, ng, 0.0);

    SlopeField slopes;
    if (opts.reconstruction == Reconstruction::muscl) slopes = compute_slopes(U, opts.limiter);

    FaceStates st{std::vector<double>(nc), std::vector<double>(nc), std::vector<double>(nc)};
    std::vector<double> F(nc);
    const bool use_wave = opts.theta > 0.0 || opts.clamp_speeds;

    auto process = [&](int dir, int i, int j) {
        face_states(U, &slopes, opts, dir, i, j, st);
        model.face_flux(dir, i, j, st.e.data(), F.data());
        const double a = model.face_wave_speed(dir, i, j, st.L.data(), st.R.data());
        auto& v = dir == 1 ? f.v.vx : f.v.vy;
        auto& r = dir == 1 ? f.rx : f.ry;
        (dir == 1 ? f.ax : f.ay)(i, j) = a;
        // Faces of the ghost ring feed tubes only; interior faces set dt.
        const bool counts = i >= 0 && j >= 0 && (dir == 1 ? i <= nx && j < ny : i < nx && j <= ny);
        for (int c = 0; c < nc; ++c) {
            double s = noflow_speed(F[c], st.e[c], opts.eps);
            if (opts.clamp_speeds) s = std::clamp(s, -a, a);
            v[c](i, j) = s;
            const double gap = std::max(a - std::abs(s), 0.0);
            r[c](i, j) = F[c] - st.e[c] * s - opts.theta * 0.5 * gap * (st.R[c] - st.L[c]);
            if (counts) f.max_speed = std::max(f.max_speed, std::abs(s));
        }
        if (counts && use_wave) f.max_wave = std::max(f.max_wave, a);
    };

    for (int j = -1; j <= ny; ++j)
        for (int i = -1; i <= nx + 1; ++i) process(1, i, j);
    for (int j = -1; j <= ny + 1; ++j)
        for (int i = -1; i <= nx; ++i) process(2, i, j);
    return f;
}

double compute_dt(double max_speed, double h, double cfl, double v_floor) {
    return cfl * h / std::max(max_speed, v_floor);
}

double compute_dt(const FaceData& f, double h, double cfl, const SchemeOptions& opts) {
    return compute_dt(std::max(f.max_speed, f.max_wave), h, cfl, opts.v_floor);
}

LagrangianField lagrangian_step(const Field& U, const FaceData& faces, const FluxModel& model, double dt,
                                double dx, double dy) {
    const int nc = U.components(), nx = U.nx(), ny = U.ny(), ng = U.ng();
    LagrangianField lag{Field(nc, nx, ny, ng), Field(nc, nx, ny, ng),
                        std::vector<Array2<EvolvedCellGeometry>>(nc, Array2<EvolvedCellGeometry>(nx, ny, ng))};
    std::vector<double> Uc(nc), S(nc);
    const double area = dx * dy;
    for (int j = -1; j <= ny; ++j) {
        for (int i = -1; i <= nx; ++i) {
            for (int c = 0; c < nc; ++c) Uc[c] = U(c, i, j);
            model.cell_source(i, j, Uc.data(), S.data());
            for (int c = 0; c < nc; ++c) {
                const auto& vx = faces.v.vx[c];
                const auto& vy = faces.v.vy[c];
                const auto g = evolve_cell_geometry(vx(i, j), vx(i + 1, j), vy(i, j), vy(i, j + 1), dt, dx, dy);
                const auto& rx = faces.rx[c];
                const auto& ry = faces.ry[c];
                const double lateral = dy * (rx(i + 1, j) - rx(i, j)) + dx * (ry(i, j + 1) - ry(i, j));
                const double M = Uc[c] * area - dt * lateral - dt * area * S[c];
                lag.content(c, i, j) = M;
                lag.ubar(c, i, j) = M / g.area();
                lag.geometry[c](i, j) = g;
            }
        }
    }
    return lag;
}

double ProjectionStencil::sum() const {
    double s = 0.0;
    for (const auto& row : C)
        for (double c : row) s += c;
    return s;
}

ProjectionStencil projection_stencil(double vW, double vE, double vS, double vN, double dt, double dx, double dy) {
    ProjectionStencil s;
    const double cxl = std::max(vW, 0.0) * dt, cxr = std::max(-vE, 0.0) * dt;
    const double cyl = std::max(vS, 0.0) * dt, cyr = std::max(-vN, 0.0) * dt;
    s.Cx = {cxl, dx - cxl - cxr, cxr};
    s.Cy = {cyl, dy - cyl - cyr, cyr};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) s.C[a][b] = s.Cx[a] * s.Cy[b];
    s.evolved_area = (dx + (vE - vW) * dt) * (dy + (vN - vS) * dt);
    return s;
}

Weights3 normalized(const ProjectionStencil& s, Normalization n) {
    const double N = n == Normalization::stencil_sum ? (s.Cx[0] + s.Cx[1] + s.Cx[2]) * (s.Cy[0] + s.Cy[1] + s.Cy[2])
                                                     : s.evolved_area;
    Weights3 w{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) w[a][b] = s.C[a][b] / N;
    return w;
}

namespace {

// Lengths of the evolved interval [lo, hi] of a cell of width h that fall
// into the cell below, the cell itself and the cell above.
std::array<double, 3> split_lengths(double vlo, double vhi, double dt, double h) {
    return {std::max(-vlo, 0.0) * dt, h - std::max(vlo, 0.0) * dt + std::min(vhi, 0.0) * dt,
            std::max(vhi, 0.0) * dt};
}

// Centroids of the three pieces relative to the evolved cell's centroid.
std::array<double, 3> split_offsets(const std::array<double, 3>& L, double lo, double hi, double h) {
    const double mid = 0.5 * (lo + hi);
    const double left_lo = lo, left_hi = -0.5 * h;
    const double c_lo = std::max(lo, -0.5 * h), c_hi = std::min(hi, 0.5 * h);
    return {L[0] > 0 ? 0.5 * (left_lo + left_hi) - mid : 0.0, 0.5 * (c_lo + c_hi) - mid,
            L[2] > 0 ? 0.5 * (0.5 * h + hi) - mid : 0.0};
}

}  // namespace

Weights3 scatter_weights(double vW, double vE, double vS, double vN, double dt, double dx, double dy) {
    const auto Lx = split_lengths(vW, vE, dt, dx);
    const auto Ly = split_lengths(vS, vN, dt, dy);
    const double wx = Lx[0] + Lx[1] + Lx[2], wy = Ly[0] + Ly[1] + Ly[2];
    Weights3 w{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) w[a][b] = (Lx[a] * Ly[b]) / (wx * wy);
    return w;
}

Field eulerian_projection(const LagrangianField& lag, const FaceData& faces, const Field& U, double dt, double dx,
                          double dy, const SchemeOptions& opts) {
    const int nc = U.components(), nx = U.nx(), ny = U.ny(), ng = U.ng();
    Field out(nc, nx, ny, ng);
    const double area = dx * dy;

    if (opts.projection == Projection::gather) {
        for (int c = 0; c < nc; ++c) {
            const auto& vx = faces.v.vx[c];
            const auto& vy = faces.v.vy[c];
            for (int j = 0; j < ny; ++j) {
                for (int i = 0; i < nx; ++i) {
                    const auto w = normalized(
                        projection_stencil(vx(i, j), vx(i + 1, j), vy(i, j), vy(i, j + 1), dt, dx, dy),
                        opts.normalization);
                    double s = 0.0;
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b) s += w[a][b] * lag.ubar(c, i + a - 1, j + b - 1);
                    out(c, i, j) = s;
                }
            }
        }
        return out;
    }

    SlopeField slopes;
    const bool linear = opts.reconstruction == Reconstruction::muscl;
    if (linear) slopes = compute_slopes(U, opts.limiter);

    for (int c = 0; c < nc; ++c) {
        const auto& vx = faces.v.vx[c];
        const auto& vy = faces.v.vy[c];
        auto& acc = out.plane(c);
        for (int j = -1; j <= ny; ++j) {
            for (int i = -1; i <= nx; ++i) {
                const auto Lx = split_lengths(vx(i, j), vx(i + 1, j), dt, dx);
                const auto Ly = split_lengths(vy(i, j), vy(i, j + 1), dt, dy);
                const auto& g = lag.geometry[c](i, j);
                const double M = lag.content(c, i, j);
                // Piece lengths sum to the evolved widths; dividing by their
                // sums keeps the weights a partition of unity in floating point.
                const double wx = Lx[0] + Lx[1] + Lx[2], wy = Ly[0] + Ly[1] + Ly[2];
                const double ubar = M / (wx * wy);
                std::array<double, 3> ox{}, oy{};
                double gx = 0.0, gy = 0.0;
                if (linear) {
                    // Linear profile of U^n stretched onto the evolved cell.
                    ox = split_offsets(Lx, g.xw, g.xe, dx);
                    oy = split_offsets(Ly, g.ys, g.yn, dy);
                    gx = slopes.dx(c, i, j) * dx * dy / (g.wx * g.wx * g.wy);
                    gy = slopes.dy(c, i, j) * dx * dy / (g.wy * g.wy * g.wx);
                }
                for (int b = 0; b < 3; ++b) {
                    const int jr = j + b - 1;
                    if (jr < 0 || jr >= ny || Ly[b] == 0.0) continue;
                    for (int a = 0; a < 3; ++a) {
                        const int ir = i + a - 1;
                        if (ir < 0 || ir >= nx || Lx[a] == 0.0) continue;
                        double piece;
                        if (linear)
                            piece = Lx[a] * Ly[b] * (ubar + gx * ox[a] + gy * oy[b]);
                        else
                            piece = M * ((Lx[a] * Ly[b]) / (wx * wy));
                        acc(ir, jr) += piece;
                    }
                }
            }
        }
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) acc(i, j) /= area;
    }
    return out;
}

StepResult full_step(const Field& U, const FluxModel& model, const BoundaryFill& bc, const SchemeOptions& opts,
                     double dx, double dy, double cfl, double dt_fixed, double dt_scale, double dt_max) {
    Field W = U;
    bc(W);
    const FaceData faces = face_stage(W, model, opts);
    StepResult res;
    res.dt = dt_fixed > 0.0 ? dt_fixed : std::min(compute_dt(faces, std::min(dx, dy), cfl, opts) * dt_scale, dt_max);
    res.max_speed = faces.max_speed;
    const LagrangianField lag = lagrangian_step(W, faces, model, res.dt, dx, dy);
    res.U = eulerian_projection(lag, faces, W, res.dt, dx, dy, opts);
    model.finalize(res.U);
    return res;
}

}  // namespace iswe
