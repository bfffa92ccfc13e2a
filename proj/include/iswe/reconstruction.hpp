#pragma once

#include <array>
#include <string>

#include "iswe/field.hpp"

namespace iswe {

enum class Reconstruction { none, muscl, p2 };
enum class Limiter { minmod, mc, vanleer };

Reconstruction parse_reconstruction(const std::string& s);
Limiter parse_limiter(const std::string& s);
std::string to_string(Reconstruction r);
std::string to_string(Limiter l);

double minmod(double a, double b);
/// Limited cell increment from the backward and forward differences.
double limited_slope(double back, double fwd, Limiter lim);

/**
 * @brief Limited increments U' (units of U) of every component.
 *
 * Filled on cells [-ng+1, n+ng-2] in each direction; needs ghost cells
 * populated beforehand.
 */
struct SlopeField {
    Field dx, dy;
};
SlopeField compute_slopes(const Field& U, Limiter lim);

/// Interface value between a left and right cell from their increments:
/// (Ul + Ur)/2 + (dUr - dUl)/8.
double muscl_interface(double Ul, double Ur, double dUl, double dUr);

/// Quadratic Lagrange basis on the nodes {-h, 0, h}: k = -1, 0, 1.
double lagrange_basis(int k, double xi);

/// Five-point cross stencil around (i, j).
struct CrossStencil {
    double c, w, e, s, n;
};

/**
 * @brief Evaluates P2 at offset (x, y) from the cell centre.
 *
 * The x and y sums both carry the centre value; `center_fix` subtracts one
 * copy so that P2(0, 0) = U_ij.
 */
double lagrange_p2(const CrossStencil& u, double x, double y, double h, bool center_fix);

}  // namespace iswe
