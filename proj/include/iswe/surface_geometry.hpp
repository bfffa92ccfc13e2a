#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iswe/field.hpp"

namespace iswe {

/// Raised when a height function or its gradient is not finite.
class GeometryError : public std::runtime_error {
public:
    GeometryError(const std::string& what, double x, double y);
    double x, y;
};

/// Raised for malformed domains, grids or configuration values.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Domain {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
};

/**
 * @brief Bottom surface given as a graph z = B(x, y) over the chart.
 *
 * `hess` is optional; when present it returns (Bxx, Bxy, Byy) and the
 * derivatives of j3 are evaluated analytically.
 */
struct HeightField {
    std::string label;
    std::function<double(double, double)> eval;
    std::function<std::array<double, 2>(double, double)> grad;
    std::function<std::array<double, 3>(double, double)> hess;
};

struct GeometrySample {
    double h1 = 1, h2 = 1, j3 = 1;
    double slope1 = 0, slope2 = 0;
    double dj3_ds1 = 0, dj3_ds2 = 0;
};

/// Diagonal of the time-space metric, (1, h1^2, h2^2).
std::array<double, 3> extended_metric(const GeometrySample& g);

HeightField flat_surface(double level = 0.0);
HeightField slope_surface();
HeightField parabola_surface();
HeightField bump_surface();
HeightField cubic3d_surface();

/// Catalog lookup: slope, parabola, bump, cubic3d, slope_square_dam, flat.
HeightField surface_by_name(const std::string& name);

/**
 * @brief Tabulated surface with bilinear interpolation.
 *
 * File format: header `nx ny xmin xmax ymin ymax`, then nx*ny values of B
 * in row-major order (x fastest). Samples sit on a uniform lattice that
 * includes both domain corners. Queries outside are clamped.
 */
struct GridSurface {
    int nx = 0, ny = 0;
    Domain domain;
    std::vector<double> values;

    static GridSurface read(const std::string& path);
    HeightField height_field() const;
};

/// Geometry at a chart point. `delta` is the finite-difference step used
/// for dj3 when the height field has no Hessian.
GeometrySample sample_geometry(const HeightField& B, double x, double y, double delta = 1e-4);

/**
 * @brief Geometry sampled at cell centres and face midpoints.
 *
 * `xface(i, j)` is the west face of cell (i, j) at x_{i-1/2};
 * `yface(i, j)` is the south face at y_{j-1/2}. Ghost cells are
 * sampled too, by evaluating the height field outside the domain.
 */
struct MetricGrid {
    int nx = 0, ny = 0, ng = 0;
    double dx = 0, dy = 0;
    Domain domain;
    Array2<GeometrySample> center, xface, yface;
    Array2<double> bottom;

    double xc(int i) const { return domain.xmin + (i + 0.5) * dx; }
    double yc(int j) const { return domain.ymin + (j + 0.5) * dy; }
};

MetricGrid build_metric_grid(const HeightField& B, const Domain& domain, int nx, int ny, int ng = 3);

/// Per-cell 3-vector field (components along t, x, y).
using VectorField = std::array<Array2<double>, 3>;
/// Per-cell symmetric 3x3 tensor field, entry [a][b].
using TensorField = std::array<std::array<Array2<double>, 3>, 3>;

/// Intrinsic divergence of a static vector field with central differences
/// (time derivative dropped). Valid on interior cells.
Array2<double> intrinsic_div_vector(const VectorField& v, const MetricGrid& G);

/// Intrinsic divergence of a static symmetric tensor field: column
/// divergence plus the metric-derivative correction terms.
VectorField intrinsic_div_tensor(const TensorField& T, const MetricGrid& G);

}  // namespace iswe
