#pragma once

#include <stdexcept>
#include <vector>

#include "iswe/field.hpp"
#include "iswe/flux_model.hpp"

namespace iswe {

/// A step whose evolved cells degenerate; retry with a smaller dt.
class CflViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Regularised no-flow speed F*U/(U^2 + eps^2); zero when U and F vanish.
inline double noflow_speed(double flux, double U, double eps) {
    return flux * U / (U * U + eps * eps);
}

/**
 * @brief Per-component face speeds.
 *
 * `vx[c](i, j)` belongs to the west face of cell (i, j), `vy[c](i, j)` to
 * its south face. For cell (i, j): vW = vx(i, j), vE = vx(i+1, j),
 * vS = vy(i, j), vN = vy(i, j+1).
 */
struct EdgeSpeeds {
    std::vector<Array2<double>> vx, vy;
};

/// Speeds from arithmetic-mean face states on every face touching an
/// interior cell (ghosts must be filled).
EdgeSpeeds edge_speeds(const Field& U, const FluxModel& model, double eps = 1e-8);

/// Evolved cell relative to the cell centre: edges at -dx/2 + vW dt etc.
struct EvolvedCellGeometry {
    double xw, xe, ys, yn;
    double wx, wy;
    double area() const { return wx * wy; }
};

/// Throws CflViolation when an evolved width is not positive.
EvolvedCellGeometry evolve_cell_geometry(double vW, double vE, double vS, double vN, double dt, double dx,
                                         double dy);

}  // namespace iswe
