#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "iswe/simulation_driver.hpp"

namespace iswe {

enum class SnapshotFormat { csv, vtk, both };

struct SimulationConfig {
    std::string case_name;
    std::string surface_file;
    int nx = 0, ny = 0;  ///< 0 = case default
    double cfl = 0.0;    ///< 0 = case default
    double t_end = 0.0;
    std::string output_dir = "output";
    int snapshots = 20;
    std::vector<double> snapshot_times;
    SnapshotFormat format = SnapshotFormat::csv;
    int diag_interval = 1;
    long max_steps = 0;
    SchemeOptions scheme;
    /// Dam used with custom surface files.
    double dam_y = 0.0, depth_up = 2.0, depth_down = 1.0;
};

/// Parses flat `key = value` lines ('#' starts a comment) into a map.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/**
 * @brief Builds and validates a configuration.
 *
 * `file_values` come from a config file, `overrides` from the command line
 * and win on conflicts. Errors name the offending key.
 */
SimulationConfig parse_config(const std::map<std::string, std::string>& file_values,
                              const std::map<std::string, std::string>& overrides = {});

/// Keys accepted by parse_config.
const std::vector<std::string>& config_keys();

/// Test case described by the configuration (catalog entry or custom surface).
TestCase make_case(const SimulationConfig& cfg);
RunConfig make_run_config(const SimulationConfig& cfg, const TestCase& tc);

/// Honours the ISWE_OUTPUT_DIR environment variable.
std::string resolve_output_dir(const std::string& configured);

void write_snapshot_csv(const std::string& path, const Field& U, const MetricGrid& G);
void write_snapshot_vtk(const std::string& path, const Field& U, const MetricGrid& G);

struct SnapshotRow {
    double x, y, B, eta, q1, q2;
};
std::vector<SnapshotRow> read_snapshot_csv(const std::string& path);

void write_diagnostics(const std::vector<Diagnostics>& series, const std::string& path);

/// Writes numbered snapshots, an index `snapshots.csv` (index,t,file) and a
/// streaming `diagnostics.csv` into a directory.
class FileObserver : public RunObserver {
public:
    FileObserver(std::string dir, SnapshotFormat fmt);
    void snapshot(double t, const Field& U, const MetricGrid& G) override;
    void diagnostics(const Diagnostics& d) override;

private:
    std::string dir_;
    SnapshotFormat fmt_;
    int count_ = 0;
    std::ofstream index_, diag_;
};

}  // namespace iswe
