#pragma once

#include <array>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "iswe/field.hpp"
#include "iswe/flux_model.hpp"
#include "iswe/noflow_tracking.hpp"
#include "iswe/reconstruction.hpp"

namespace iswe {

/// scatter: each evolved cell hands its content to the cells it overlaps
/// (exactly conservative). gather: each cell collects from its neighbours
/// with its own 3x3 stencil (not conservative).
enum class Projection { scatter, gather };
/// Divisor of the gather projection: the stencil sum dx*dy, or the
/// evolved area A(R̄) of the receiving cell.
enum class Normalization { stencil_sum, evolved_area };

Projection parse_projection(const std::string& s);
Normalization parse_normalization(const std::string& s);

struct SchemeOptions {
    /// Weight of the dissipation on the part of the wave fan not covered by
    /// the no-flow speed; 0 disables it.
    double theta = 1.0;
    /// Limit each no-flow speed by the local wave-speed bound.
    bool clamp_speeds = true;
    double eps = 1e-8;
    double v_floor = 1e-12;
    Reconstruction reconstruction = Reconstruction::none;
    Limiter limiter = Limiter::minmod;
    bool p2_center_fix = true;
    Projection projection = Projection::scatter;
    Normalization normalization = Normalization::stencil_sum;

    /// Literal scheme: unclamped speeds, no added dissipation.
    static SchemeOptions literal();
};

/// Face speeds, lateral residual fluxes and wave-speed bounds.
struct FaceData {
    EdgeSpeeds v;
    std::vector<Array2<double>> rx, ry;
    Array2<double> ax, ay;
    double max_speed = 0.0;
    double max_wave = 0.0;
};

FaceData face_stage(const Field& U, const FluxModel& model, const SchemeOptions& opts);

/// dt = cfl*h / max(speed, v_floor).
double compute_dt(double max_speed, double h, double cfl, double v_floor);
/// Uses the wave-speed bound as well whenever clamping or dissipation is on.
double compute_dt(const FaceData& f, double h, double cfl, const SchemeOptions& opts);

/// Evolved cells of the ghost ring and interior, per component.
struct LagrangianField {
    Field content;  ///< conserved content of each evolved cell
    Field ubar;     ///< content / evolved area
    std::vector<Array2<EvolvedCellGeometry>> geometry;
};

LagrangianField lagrangian_step(const Field& U, const FaceData& faces, const FluxModel& model, double dt,
                                double dx, double dy);

/// Receiver-view stencil: Cx = [Cxl, dx - Cxl - Cxr, Cxr] with the overlap
/// magnitudes Cxl = max(vW, 0) dt, Cxr = max(-vE, 0) dt; C[a][b] = Cx[a]*Cy[b]
/// weights the evolved cell (i+a-1, j+b-1).
struct ProjectionStencil {
    std::array<double, 3> Cx{}, Cy{};
    std::array<std::array<double, 3>, 3> C{};
    double evolved_area = 0.0;
    double sum() const;
};
using Weights3 = std::array<std::array<double, 3>, 3>;

ProjectionStencil projection_stencil(double vW, double vE, double vS, double vN, double dt, double dx, double dy);
Weights3 normalized(const ProjectionStencil& s, Normalization n);
/// Donor-view weights: fraction of an evolved cell landing in (i+a-1, j+b-1).
Weights3 scatter_weights(double vW, double vE, double vS, double vN, double dt, double dx, double dy);

Field eulerian_projection(const LagrangianField& lag, const FaceData& faces, const Field& U, double dt, double dx,
                          double dy, const SchemeOptions& opts);

using BoundaryFill = std::function<void(Field&)>;

struct StepResult {
    Field U;
    double dt = 0.0;
    double max_speed = 0.0;
};

/**
 * @brief One Lagrangian-Eulerian step on the interior of `U`.
 *
 * `bc` fills the ghost layers of a working copy. When `dt_fixed` > 0 it
 * replaces the CFL step; otherwise dt = min(compute_dt * dt_scale, dt_max).
 */
StepResult full_step(const Field& U, const FluxModel& model, const BoundaryFill& bc, const SchemeOptions& opts,
                     double dx, double dy, double cfl, double dt_fixed = 0.0, double dt_scale = 1.0,
                     double dt_max = std::numeric_limits<double>::infinity());

}  // namespace iswe
