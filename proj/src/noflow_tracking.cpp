#include "iswe/noflow_tracking.hpp"

#include <string>

namespace iswe {

void FluxModel::cell_source(int, int, const double*, double* S) const {
    for (int c = 0; c < components(); ++c) S[c] = 0.0;
}

void FluxModel::finalize(Field&) const {}

EdgeSpeeds edge_speeds(const Field& U, const FluxModel& model, double eps) {
    const int nc = U.components(), nx = U.nx(), ny = U.ny(), ng = U.ng();
    EdgeSpeeds v;
    v.vx.assign(nc, Array2<double>(nx, ny, ng, 0.0));
    v.vy.assign(nc, Array2<double>(nx, ny, ng, 0.0));
    std::vector<double> Ue(nc), F(nc);
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            if (j < ny) {
                for (int c = 0; c < nc; ++c) Ue[c] = 0.5 * (U(c, i - 1, j) + U(c, i, j));
                model.face_flux(1, i, j, Ue.data(), F.data());
                for (int c = 0; c < nc; ++c) v.vx[c](i, j) = noflow_speed(F[c], Ue[c], eps);
            }
            if (i < nx) {
                for (int c = 0; c < nc; ++c) Ue[c] = 0.5 * (U(c, i, j - 1) + U(c, i, j));
                model.face_flux(2, i, j, Ue.data(), F.data());
                for (int c = 0; c < nc; ++c) v.vy[c](i, j) = noflow_speed(F[c], Ue[c], eps);
            }
        }
    }
    return v;
}

EvolvedCellGeometry evolve_cell_geometry(double vW, double vE, double vS, double vN, double dt, double dx,
                                         double dy) {
    EvolvedCellGeometry g;
    g.xw = -0.5 * dx + vW * dt;
    g.xe = 0.5 * dx + vE * dt;
    g.ys = -0.5 * dy + vS * dt;
    g.yn = 0.5 * dy + vN * dt;
    g.wx = dx + (vE - vW) * dt;
    g.wy = dy + (vN - vS) * dt;
    if (!(g.wx > 0.0) || !(g.wy > 0.0))
        throw CflViolation("evolved cell collapsed (widths " + std::to_string(g.wx) + ", " +
                           std::to_string(g.wy) + ")");
    return g;
}

}  // namespace iswe
