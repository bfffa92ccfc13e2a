#pragma once

#include <array>
#include <stdexcept>

#include "iswe/flux_model.hpp"
#include "iswe/surface_geometry.hpp"

namespace iswe {

/// U = (eta, q1, q2): normal depth and the two tangential momenta.
using ConservedState = std::array<double, 3>;
/// Extended time-space flux, entry [a][b] with a, b in {t, x, y}.
using FluxTensor = std::array<std::array<double, 3>, 3>;
using SourceVector = std::array<double, 3>;

class StateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PhysParams {
    double g = 9.81;
    double rho = 1000.0;
    double eta_dry = 1e-6;
    bool stress_enabled = false;
    bool friction_enabled = false;
};

/// q / eta, desingularised below the dry threshold as q*eta/(eta^2+eta_dry^2).
inline double velocity(double q, double eta, double eta_dry) {
    return eta >= eta_dry ? q / eta : q * eta / (eta * eta + eta_dry * eta_dry);
}

FluxTensor flux_tensor(const ConservedState& U, const GeometrySample& geo, const PhysParams& p);
SourceVector source_vector(const ConservedState& U, const GeometrySample& geo, const PhysParams& p);

/// Largest characteristic speed in chart units through a face normal to
/// direction `dir` (1 = x, 2 = y): h^2 |u| + h sqrt(g eta j3).
double wave_speed(const ConservedState& U, const GeometrySample& geo, const PhysParams& p, int dir);

/// Shallow-water physics on a MetricGrid for the Lagrangian-Eulerian step.
class IsweModel : public FluxModel {
public:
    IsweModel(const MetricGrid& G, PhysParams p) : G_(G), p_(p) {}

    int components() const override { return 3; }
    void face_flux(int dir, int i, int j, const double* Ue, double* F) const override;
    double face_wave_speed(int dir, int i, int j, const double* UL, const double* UR) const override;
    void cell_source(int i, int j, const double* U, double* S) const override;
    void finalize(Field& U) const override;

    const MetricGrid& grid() const { return G_; }
    const PhysParams& params() const { return p_; }

private:
    const MetricGrid& G_;
    PhysParams p_;
};

}  // namespace iswe
