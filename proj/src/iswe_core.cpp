#include "iswe/iswe_core.hpp"

#include <algorithm>
#include <cmath>

namespace iswe {

namespace {

void check_state(const ConservedState& U) {
    if (!(U[0] >= 0.0) || !std::isfinite(U[1]) || !std::isfinite(U[2]))
        throw StateError("invalid state: eta must be >= 0 and momenta finite");
}

// The bed-slope factor is slope_i * h_i, i.e. the chart slope of B. With
// it the rest state B + eta/j3 = const balances the pressure exactly on a
// plane tilted along one axis.
void bed_source(double eta, const GeometrySample& s, const PhysParams& p, double* S) {
    const double a = 0.5 * p.g * eta * eta;
    S[0] = 0.0;
    S[1] = a / (s.h1 * s.h1) * s.dj3_ds1 + p.g * eta / (s.h1 * s.h1) * (s.slope1 * s.h1);
    S[2] = a / (s.h2 * s.h2) * s.dj3_ds2 + p.g * eta / (s.h2 * s.h2) * (s.slope2 * s.h2);
}

}  // namespace

FluxTensor flux_tensor(const ConservedState& U, const GeometrySample& geo, const PhysParams& p) {
    check_state(U);
    const double eta = U[0], q1 = U[1], q2 = U[2];
    const double u1 = velocity(q1, eta, p.eta_dry);
    const double u2 = velocity(q2, eta, p.eta_dry);
    const double press = 0.5 * p.g * eta * eta * geo.j3;
    FluxTensor F{};
    F[0] = {eta, q1, q2};
    F[1][0] = q1;
    F[2][0] = q2;
    F[1][1] = q1 * u1 + press / (geo.h1 * geo.h1);
    F[1][2] = F[2][1] = q1 * u2;
    F[2][2] = q2 * u2 + press / (geo.h2 * geo.h2);
    return F;
}

SourceVector source_vector(const ConservedState& U, const GeometrySample& geo, const PhysParams& p) {
    check_state(U);
    SourceVector S{};
    bed_source(U[0], geo, p, S.data());
    return S;
}

double wave_speed(const ConservedState& U, const GeometrySample& geo, const PhysParams& p, int dir) {
    const double h = dir == 1 ? geo.h1 : geo.h2;
    const double u = velocity(U[dir], U[0], p.eta_dry);
    return h * h * std::abs(u) + h * std::sqrt(p.g * std::max(U[0], 0.0) * geo.j3);
}

void IsweModel::face_flux(int dir, int i, int j, const double* Ue, double* F) const {
    const GeometrySample& s = dir == 1 ? G_.xface(i, j) : G_.yface(i, j);
    const double eta = Ue[0];
    const double h2 = dir == 1 ? s.h1 * s.h1 : s.h2 * s.h2;
    const double un = velocity(Ue[dir], eta, p_.eta_dry);
    // Row `dir` of the flux tensor times h^2; the pressure carries 1/h^2.
    F[0] = Ue[dir] * h2;
    F[1] = Ue[1] * un * h2;
    F[2] = Ue[2] * un * h2;
    F[dir] += 0.5 * p_.g * eta * eta * s.j3;
}

double IsweModel::face_wave_speed(int dir, int i, int j, const double* UL, const double* UR) const {
    const GeometrySample& s = dir == 1 ? G_.xface(i, j) : G_.yface(i, j);
    return std::max(wave_speed({UL[0], UL[1], UL[2]}, s, p_, dir), wave_speed({UR[0], UR[1], UR[2]}, s, p_, dir));
}

void IsweModel::cell_source(int i, int j, const double* U, double* S) const {
    bed_source(U[0], G_.center(i, j), p_, S);
}

void IsweModel::finalize(Field& U) const {
    for (int j = 0; j < U.ny(); ++j) {
        for (int i = 0; i < U.nx(); ++i) {
            if (U(0, i, j) < p_.eta_dry) {
                U(1, i, j) = 0.0;
                U(2, i, j) = 0.0;
            }
        }
    }
}

}  // namespace iswe
