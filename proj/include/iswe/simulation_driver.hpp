#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iswe/field.hpp"
#include "iswe/iswe_core.hpp"
#include "iswe/lagrangian_eulerian.hpp"
#include "iswe/surface_geometry.hpp"

namespace iswe {

enum class BoundaryKind { noflow, outlet };

struct BoundarySpec {
    BoundaryKind west = BoundaryKind::noflow, east = BoundaryKind::noflow;
    BoundaryKind south = BoundaryKind::noflow, north = BoundaryKind::noflow;
};

struct TestCase {
    std::string name;
    HeightField surface;
    Domain domain;
    std::function<ConservedState(double, double)> initial;
    BoundarySpec boundary;
    double cfl = 0.3;
    int nx = 40, ny = 400;
    /// Snapshot times of the reference benchmark.
    std::vector<double> reference_times;
};

/// The five benchmark cases: slope, parabola, bump, cubic3d, slope_square_dam.
std::vector<TestCase> catalog();
TestCase find_case(const std::string& name);

/// Fills every ghost layer: noflow mirrors the state and flips the
/// wall-normal momentum, outlet copies the boundary cell.
void apply_boundary(Field& U, const BoundarySpec& spec);

Field initial_field(const TestCase& tc, const MetricGrid& G);

/// Sum of eta over the chart cells, sum eta dx dy.
double total_mass(const Field& U, const MetricGrid& G);

struct Diagnostics {
    double t = 0.0;
    double mass = 0.0;
    /// dx dy sum |U^{n+1} - U^n| / dt of q1 and q2: the discrete balance
    /// residual of the momentum equations.
    double l1_s2 = 0.0, l1_s3 = 0.0;
    double max_speed = 0.0;
    double dt = 0.0;
    long steps = 0;
};

/// Raised when a step keeps failing after repeated dt halving.
class StepFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int nx = 40, ny = 400;
    double cfl = 0.3;
    double t_end = 0.0;
    SchemeOptions scheme;
    PhysParams phys;
    /// Snapshot times besides t = 0 and t_end.
    std::vector<double> output_times;
    /// Record diagnostics every this many steps (and at the end).
    int diag_interval = 1;
    /// Stop after this many steps (0 = unlimited).
    long max_steps = 0;
};

class RunObserver {
public:
    virtual ~RunObserver() = default;
    virtual void snapshot(double t, const Field& U, const MetricGrid& G) = 0;
    virtual void diagnostics(const Diagnostics& d) = 0;
};

struct RunResult {
    Field U;
    std::vector<Diagnostics> series;
    Diagnostics last;
};

RunResult run(const TestCase& tc, const RunConfig& cfg, RunObserver* obs = nullptr);

/// Same as run() but on a caller-provided grid and initial state.
RunResult run_on(const MetricGrid& G, Field U, const BoundarySpec& bc, const RunConfig& cfg,
                 RunObserver* obs = nullptr);

/// Wet-bed dam break on a flat bottom at rest: depth at `xi` = (y - y0)/t.
double stoker_depth(double h_left, double h_right, double g, double xi);

/// Observed L1(eta) error of the flat-bottom dam break at t = 0.5 s on
/// [0,1]x[0,10] with the dam at y = 2, measured over y > 0.5.
double stoker_l1_error(int ny, double cfl, const SchemeOptions& scheme);

/// L1 error of linear advection of 2 + sin(2 pi x) sin(2 pi y) with speed
/// (1, 0.5) on the periodic unit square after t = 0.5, n x n cells.
double advected_bump_l1_error(int n, double cfl, const SchemeOptions& scheme);

}  // namespace iswe
