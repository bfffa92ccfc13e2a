#include "iswe/reconstruction.hpp"

#include <algorithm>
#include <cmath>

#include "iswe/surface_geometry.hpp"

namespace iswe {

Reconstruction parse_reconstruction(const std::string& s) {
    if (s == "none") return Reconstruction::none;
    if (s == "muscl") return Reconstruction::muscl;
    if (s == "p2") return Reconstruction::p2;
    throw ConfigError("reconstruction: expected none|muscl|p2, got '" + s + "'");
}

Limiter parse_limiter(const std::string& s) {
    if (s == "minmod") return Limiter::minmod;
    if (s == "mc") return Limiter::mc;
    if (s == "vanleer") return Limiter::vanleer;
    throw ConfigError("limiter: expected minmod|mc|vanleer, got '" + s + "'");
}

std::string to_string(Reconstruction r) {
    switch (r) {
        case Reconstruction::muscl: return "muscl";
        case Reconstruction::p2: return "p2";
        default: return "none";
    }
}

std::string to_string(Limiter l) {
    switch (l) {
        case Limiter::mc: return "mc";
        case Limiter::vanleer: return "vanleer";
        default: return "minmod";
    }
}

double minmod(double a, double b) {
    if (a * b <= 0.0) return 0.0;
    return std::abs(a) < std::abs(b) ? a : b;
}

double limited_slope(double back, double fwd, Limiter lim) {
    switch (lim) {
        case Limiter::minmod: return minmod(back, fwd);
        case Limiter::mc: {
            if (back * fwd <= 0.0) return 0.0;
            const double c = 0.5 * (back + fwd);
            const double m = std::min({std::abs(c), 2 * std::abs(back), 2 * std::abs(fwd)});
            return std::copysign(m, c);
        }
        case Limiter::vanleer:
            return back * fwd <= 0.0 ? 0.0 : 2 * back * fwd / (back + fwd);
    }
    return 0.0;
}

SlopeField compute_slopes(const Field& U, Limiter lim) {
    const int nc = U.components(), nx = U.nx(), ny = U.ny(), ng = U.ng();
    SlopeField s{Field(nc, nx, ny, ng), Field(nc, nx, ny, ng)};
    for (int c = 0; c < nc; ++c) {
        for (int j = -ng + 1; j <= ny + ng - 2; ++j) {
            for (int i = -ng + 1; i <= nx + ng - 2; ++i) {
                const double u = U(c, i, j);
                s.dx(c, i, j) = limited_slope(u - U(c, i - 1, j), U(c, i + 1, j) - u, lim);
                s.dy(c, i, j) = limited_slope(u - U(c, i, j - 1), U(c, i, j + 1) - u, lim);
            }
        }
    }
    return s;
}

double muscl_interface(double Ul, double Ur, double dUl, double dUr) {
    return 0.5 * (Ul + Ur) + 0.125 * (dUr - dUl);
}

double lagrange_basis(int k, double xi) {
    if (k == 0) return 1.0 - xi * xi;
    const double t = xi + 0.5 * k;
    return 0.5 * (t * t - 0.25);
}

double lagrange_p2(const CrossStencil& u, double x, double y, double h, bool center_fix) {
    const double xi = x / h, eta = y / h;
    double v = u.w * lagrange_basis(-1, xi) + u.s * lagrange_basis(-1, eta) + u.c * lagrange_basis(0, xi) +
               u.c * lagrange_basis(0, eta) + u.e * lagrange_basis(1, xi) + u.n * lagrange_basis(1, eta);
    if (center_fix) v -= u.c;
    return v;
}

}  // namespace iswe
