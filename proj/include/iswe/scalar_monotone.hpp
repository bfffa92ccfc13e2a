#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iswe/field.hpp"
#include "iswe/flux_model.hpp"
#include "iswe/lagrangian_eulerian.hpp"

namespace iswe {

/// Scalar conservation law u_t + d/dx f1(u) + d/dy f2(u) = 0 on a flat chart.
struct ScalarProblem {
    std::string name;
    std::function<double(double)> f1, df1, f2, df2;
};

ScalarProblem linear_advection(double ax, double ay);
ScalarProblem burgers();

class ScalarModel : public FluxModel {
public:
    explicit ScalarModel(ScalarProblem p) : p_(std::move(p)) {}
    int components() const override { return 1; }
    void face_flux(int dir, int i, int j, const double* Ue, double* F) const override;
    double face_wave_speed(int dir, int i, int j, const double* UL, const double* UR) const override;

private:
    ScalarProblem p_;
};

/// Periodic ghost fill of every component.
void fill_periodic(Field& U);

/// The Lagrangian-Eulerian pipeline applied to a scalar field, periodic.
StepResult scalar_le_step(const Field& u, const ScalarProblem& prob, const SchemeOptions& opts, double h, double cfl,
                          double dt_fixed = 0.0);

/// Row-major n x m periodic grid, index j*n + i.
struct ScalarGrid {
    int n = 0, m = 0;
    std::vector<double> u;
    double& at(int i, int j) { return u[index(i, j)]; }
    double at(int i, int j) const { return u[index(i, j)]; }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(((j % m) + m) % m) * n + static_cast<std::size_t>(((i % n) + n) % n);
    }
};

/// Interior of component 0 as a periodic grid, and back (ghosts filled).
ScalarGrid to_grid(const Field& u);
Field to_field(const ScalarGrid& g, int ng = 3);

/// Numerical fluxes of the conservative form: F(i, j) through x_{i+1/2},
/// G(i, j) through y_{j+1/2}, in units of u times speed.
struct MonotoneFluxes {
    ScalarGrid F, G;
};

/**
 * @brief Conservative finite-difference form of the literal scalar scheme.
 *
 * u^{n+1} = u - dt/h (F_{i+1/2} - F_{i-1/2}) - dt/h (G_{j+1/2} - G_{j-1/2}).
 * Transfers between evolved cells are booked on the x face of the donor's
 * row first and then on the y face of the receiver's column.
 */
MonotoneFluxes monotone_fluxes(const ScalarGrid& u, const ScalarProblem& prob, double dt, double h,
                               double eps = 1e-8);
ScalarGrid monotone_step(const ScalarGrid& u, const ScalarProblem& prob, double dt, double h, double eps = 1e-8);

struct MonotoneReport {
    bool ok = true;
    int violations = 0;
    double worst = 0.0;
};

/// Every interior value of `after` must lie within the min/max of the 3x3
/// neighbourhood of `before` (whose ghost ring must be valid).
MonotoneReport check_monotone(const Field& before, const Field& after, double tol = 1e-13);

}  // namespace iswe
