#pragma once

#include "iswe/field.hpp"

namespace iswe {

/**
 * @brief Physics plugged into the Lagrangian-Eulerian step.
 *
 * Faces are addressed by the cell they bound on the low side: `dir` 1 is
 * the west face of cell (i, j), `dir` 2 its south face. Fluxes are in
 * chart units, i.e. the flux of component b through an x-face is
 * F^{(b,x)} h1^2.
 */
class FluxModel {
public:
    virtual ~FluxModel() = default;
    virtual int components() const = 0;
    virtual void face_flux(int dir, int i, int j, const double* Ue, double* F) const = 0;
    /// Upper bound of the characteristic speeds of the two face states.
    virtual double face_wave_speed(int dir, int i, int j, const double* UL, const double* UR) const = 0;
    virtual void cell_source(int i, int j, const double* U, double* S) const;
    /// Post-step cleanup (e.g. zeroing momenta of dry cells).
    virtual void finalize(Field& U) const;
};

}  // namespace iswe
