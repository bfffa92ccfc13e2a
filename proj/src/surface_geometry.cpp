#include "iswe/surface_geometry.hpp"

#include <algorithm>
#include <memory>
#include <cmath>
#include <fstream>
#include <sstream>

namespace iswe {

namespace {

std::string where(double x, double y) {
    std::ostringstream os;
    os.precision(17);
    os << " at (" << x << ", " << y << ")";
    return os.str();
}

}  // namespace

GeometryError::GeometryError(const std::string& what, double x_, double y_)
    : std::runtime_error(what + where(x_, y_)), x(x_), y(y_) {}

std::array<double, 3> extended_metric(const GeometrySample& g) {
    return {1.0, g.h1 * g.h1, g.h2 * g.h2};
}

HeightField flat_surface(double level) {
    return {"flat",
            [level](double, double) { return level; },
            [](double, double) { return std::array<double, 2>{0.0, 0.0}; },
            [](double, double) { return std::array<double, 3>{0.0, 0.0, 0.0}; }};
}

HeightField slope_surface() {
    return {"slope",
            [](double, double y) { return 0.1 * y + 1.0; },
            [](double, double) { return std::array<double, 2>{0.0, 0.1}; },
            [](double, double) { return std::array<double, 3>{0.0, 0.0, 0.0}; }};
}

HeightField parabola_surface() {
    return {"parabola",
            [](double, double y) { return 0.04 * (y - 10.0) * (y - 10.0); },
            [](double, double y) { return std::array<double, 2>{0.0, 0.08 * (y - 10.0)}; },
            [](double, double) { return std::array<double, 3>{0.0, 0.0, 0.08}; }};
}

HeightField bump_surface() {
    return {"bump",
            [](double x, double y) { return -0.8 * std::sqrt(x * x + y * y + 1.0); },
            [](double x, double y) {
                const double r = std::sqrt(x * x + y * y + 1.0);
                return std::array<double, 2>{-0.8 * x / r, -0.8 * y / r};
            },
            [](double x, double y) {
                const double r2 = x * x + y * y + 1.0;
                const double r3 = r2 * std::sqrt(r2);
                return std::array<double, 3>{-0.8 * (y * y + 1.0) / r3, 0.8 * x * y / r3,
                                             -0.8 * (x * x + 1.0) / r3};
            }};
}

HeightField cubic3d_surface() {
    return {"cubic3d",
            [](double x, double y) { return -y * y * y / 500.0 - y * x * x / 100.0; },
            [](double x, double y) {
                return std::array<double, 2>{-2.0 * x * y / 100.0,
                                             -3.0 * y * y / 500.0 - x * x / 100.0};
            },
            [](double x, double y) {
                return std::array<double, 3>{-2.0 * y / 100.0, -2.0 * x / 100.0, -6.0 * y / 500.0};
            }};
}

HeightField surface_by_name(const std::string& name) {
    if (name == "slope") return slope_surface();
    if (name == "slope_square_dam") {
        auto s = slope_surface();
        s.label = name;
        return s;
    }
    if (name == "parabola") return parabola_surface();
    if (name == "bump") return bump_surface();
    if (name == "cubic3d") return cubic3d_surface();
    if (name == "flat") return flat_surface();
    throw ConfigError("unknown surface '" + name + "'");
}

GridSurface GridSurface::read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open surface file " + path);
    GridSurface s;
    in >> s.nx >> s.ny >> s.domain.xmin >> s.domain.xmax >> s.domain.ymin >> s.domain.ymax;
    if (!in || s.nx < 2 || s.ny < 2)
        throw ConfigError("bad header in surface file " + path + " (need nx ny xmin xmax ymin ymax, nx,ny >= 2)");
    if (!(s.domain.xmax > s.domain.xmin) || !(s.domain.ymax > s.domain.ymin))
        throw ConfigError("degenerate domain in surface file " + path);
    s.values.resize(static_cast<std::size_t>(s.nx) * s.ny);
    for (auto& v : s.values) {
        if (!(in >> v)) throw ConfigError("surface file " + path + " has fewer than nx*ny values");
    }
    return s;
}

HeightField GridSurface::height_field() const {
    // The returned closures own a copy of the table so they outlive *this.
    const auto self = std::make_shared<const GridSurface>(*this);
    // Locate the lattice cell and local coordinates, clamping outside queries.
    auto locate = [self](double x, double y) {
        const auto& d = self->domain;
        const double hx = (d.xmax - d.xmin) / (self->nx - 1);
        const double hy = (d.ymax - d.ymin) / (self->ny - 1);
        const double fx = std::clamp((x - d.xmin) / hx, 0.0, double(self->nx - 1));
        const double fy = std::clamp((y - d.ymin) / hy, 0.0, double(self->ny - 1));
        const int i = std::min(int(fx), self->nx - 2);
        const int j = std::min(int(fy), self->ny - 2);
        return std::array<double, 6>{double(i), double(j), fx - i, fy - j, hx, hy};
    };
    auto at = [self](int i, int j) { return self->values[static_cast<std::size_t>(j) * self->nx + i]; };
    HeightField hf;
    hf.label = "grid";
    hf.eval = [=](double x, double y) {
        const auto c = locate(x, y);
        const int i = int(c[0]), j = int(c[1]);
        const double s = c[2], t = c[3];
        return (1 - s) * (1 - t) * at(i, j) + s * (1 - t) * at(i + 1, j) + (1 - s) * t * at(i, j + 1) +
               s * t * at(i + 1, j + 1);
    };
    hf.grad = [=](double x, double y) {
        const auto c = locate(x, y);
        const int i = int(c[0]), j = int(c[1]);
        const double s = c[2], t = c[3];
        const double bx = ((1 - t) * (at(i + 1, j) - at(i, j)) + t * (at(i + 1, j + 1) - at(i, j + 1))) / c[4];
        const double by = ((1 - s) * (at(i, j + 1) - at(i, j)) + s * (at(i + 1, j + 1) - at(i + 1, j))) / c[5];
        return std::array<double, 2>{bx, by};
    };
    return hf;
}

GeometrySample sample_geometry(const HeightField& B, double x, double y, double delta) {
    const double z = B.eval(x, y);
    const auto g = B.grad(x, y);
    if (!std::isfinite(z) || !std::isfinite(g[0]) || !std::isfinite(g[1]))
        throw GeometryError("non-finite height or gradient of surface '" + B.label + "'", x, y);

    auto j3_of = [](const std::array<double, 2>& gr) {
        return 1.0 / std::sqrt(1.0 + gr[0] * gr[0] + gr[1] * gr[1]);
    };

    GeometrySample s;
    s.h1 = std::sqrt(1.0 + g[0] * g[0]);
    s.h2 = std::sqrt(1.0 + g[1] * g[1]);
    s.j3 = j3_of(g);
    s.slope1 = g[0] / s.h1;
    s.slope2 = g[1] / s.h2;
    if (B.hess) {
        const auto H = B.hess(x, y);
        const double j33 = s.j3 * s.j3 * s.j3;
        s.dj3_ds1 = -j33 * (g[0] * H[0] + g[1] * H[1]);
        s.dj3_ds2 = -j33 * (g[0] * H[1] + g[1] * H[2]);
    } else {
        s.dj3_ds1 = (j3_of(B.grad(x + delta, y)) - j3_of(B.grad(x - delta, y))) / (2 * delta);
        s.dj3_ds2 = (j3_of(B.grad(x, y + delta)) - j3_of(B.grad(x, y - delta))) / (2 * delta);
    }
    if (!std::isfinite(s.dj3_ds1) || !std::isfinite(s.dj3_ds2))
        throw GeometryError("non-finite geometry derivative of surface '" + B.label + "'", x, y);
    return s;
}

MetricGrid build_metric_grid(const HeightField& B, const Domain& domain, int nx, int ny, int ng) {
    if (nx < 3 || ny < 3) throw ConfigError("grid needs nx, ny >= 3");
    if (!(domain.xmax > domain.xmin) || !(domain.ymax > domain.ymin))
        throw ConfigError("degenerate domain");
    MetricGrid G;
    G.nx = nx;
    G.ny = ny;
    G.ng = ng;
    G.domain = domain;
    G.dx = (domain.xmax - domain.xmin) / nx;
    G.dy = (domain.ymax - domain.ymin) / ny;
    G.center = Array2<GeometrySample>(nx, ny, ng);
    G.xface = Array2<GeometrySample>(nx, ny, ng);
    G.yface = Array2<GeometrySample>(nx, ny, ng);
    G.bottom = Array2<double>(nx, ny, ng);
    const double delta = 0.5 * std::min(G.dx, G.dy);
    for (int j = -ng; j <= ny + ng; ++j) {
        for (int i = -ng; i <= nx + ng; ++i) {
            const double x = G.xc(i), y = G.yc(j);
            G.center(i, j) = sample_geometry(B, x, y, delta);
            G.bottom(i, j) = B.eval(x, y);
            G.xface(i, j) = sample_geometry(B, x - 0.5 * G.dx, y, delta);
            G.yface(i, j) = sample_geometry(B, x, y - 0.5 * G.dy, delta);
        }
    }
    return G;
}

Array2<double> intrinsic_div_vector(const VectorField& v, const MetricGrid& G) {
    Array2<double> out(G.nx, G.ny, G.ng, 0.0);
    auto w = [&](int i, int j) { return G.center(i, j).h1 * G.center(i, j).h2; };
    for (int j = 0; j < G.ny; ++j) {
        for (int i = 0; i < G.nx; ++i) {
            const double ddx = (w(i + 1, j) * v[1](i + 1, j) - w(i - 1, j) * v[1](i - 1, j)) / (2 * G.dx);
            const double ddy = (w(i, j + 1) * v[2](i, j + 1) - w(i, j - 1) * v[2](i, j - 1)) / (2 * G.dy);
            out(i, j) = (ddx + ddy) / w(i, j);
        }
    }
    return out;
}

VectorField intrinsic_div_tensor(const TensorField& T, const MetricGrid& G) {
    VectorField out;
    for (auto& c : out) c = Array2<double>(G.nx, G.ny, G.ng, 0.0);

    // Square roots of the diagonal metric entries: (1, h1, h2).
    auto sq = [&](int k, int i, int j) {
        const auto& s = G.center(i, j);
        return k == 0 ? 1.0 : (k == 1 ? s.h1 : s.h2);
    };
    auto ddx = [&](auto f, int i, int j) { return (f(i + 1, j) - f(i - 1, j)) / (2 * G.dx); };
    auto ddy = [&](auto f, int i, int j) { return (f(i, j + 1) - f(i, j - 1)) / (2 * G.dy); };

    for (int c = 0; c < 3; ++c) {
        VectorField column{T[0][c], T[1][c], T[2][c]};
        const auto div = intrinsic_div_vector(column, G);
        for (int j = 0; j < G.ny; ++j) {
            for (int i = 0; i < G.nx; ++i) {
                auto sqc = [&](int a, int b) { return sq(c, a, b); };
                auto sq1 = [&](int a, int b) { return sq(1, a, b); };
                auto sq2 = [&](int a, int b) { return sq(2, a, b); };
                // Derivative along the coordinate paired with component c (zero for time).
                auto dsc = [&](auto f) {
                    if (c == 1) return ddx(f, i, j);
                    if (c == 2) return ddy(f, i, j);
                    return 0.0;
                };
                const double gc = sqc(i, j);
                double r = div(i, j);
                r += (2 * T[1][c](i, j) * ddx(sqc, i, j) - T[1][1](i, j) * sq1(i, j) / gc * dsc(sq1)) / gc;
                r += (2 * T[2][c](i, j) * ddy(sqc, i, j) - T[2][2](i, j) * sq2(i, j) / gc * dsc(sq2)) / gc;
                out[c](i, j) = r;
            }
        }
    }
    return out;
}

}  // namespace iswe
