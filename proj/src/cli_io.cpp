#include "iswe/cli_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace iswe {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Short form for messages.
std::string brief(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size() || !std::isfinite(d)) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a number, got '" + v + "'");
    }
}

long to_long(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long n = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected an integer, got '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    throw ConfigError(key + ": expected true|false, got '" + v + "'");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

Domain case_domain(const SimulationConfig& cfg) {
    if (!cfg.surface_file.empty()) return GridSurface::read(cfg.surface_file).domain;
    return find_case(cfg.case_name).domain;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "case",          "surface_file",   "nx",           "ny",         "cfl",          "t_end",
        "output_dir",    "snapshots",      "snapshot_times", "format",   "diag_interval", "max_steps",
        "reconstruction", "limiter",       "projection",   "normalization", "p2_center_fix", "theta",
        "clamp_speeds",  "dam_y",          "depth_up",     "depth_down"};
    return keys;
}

SimulationConfig parse_config(const std::map<std::string, std::string>& file_values,
                              const std::map<std::string, std::string>& overrides) {
    auto kv = file_values;
    for (const auto& [k, v] : overrides) kv[k] = v;

    SimulationConfig cfg;
    for (const auto& [key, v] : kv) {
        const auto& keys = config_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError("unknown key '" + key + "'");
        if (key == "case") cfg.case_name = v;
        else if (key == "surface_file") cfg.surface_file = v;
        else if (key == "nx") cfg.nx = int(to_long(key, v));
        else if (key == "ny") cfg.ny = int(to_long(key, v));
        else if (key == "cfl") cfg.cfl = to_double(key, v);
        else if (key == "t_end") cfg.t_end = to_double(key, v);
        else if (key == "output_dir") cfg.output_dir = v;
        else if (key == "snapshots") cfg.snapshots = int(to_long(key, v));
        else if (key == "snapshot_times") {
            std::istringstream in(v);
            std::string item;
            while (std::getline(in, item, ','))
                if (!trim(item).empty()) cfg.snapshot_times.push_back(to_double(key, trim(item)));
        } else if (key == "format") {
            if (v == "csv") cfg.format = SnapshotFormat::csv;
            else if (v == "vtk") cfg.format = SnapshotFormat::vtk;
            else if (v == "both") cfg.format = SnapshotFormat::both;
            else throw ConfigError("format: expected csv|vtk|both, got '" + v + "'");
        } else if (key == "diag_interval") cfg.diag_interval = int(to_long(key, v));
        else if (key == "max_steps") cfg.max_steps = to_long(key, v);
        else if (key == "reconstruction") cfg.scheme.reconstruction = parse_reconstruction(v);
        else if (key == "limiter") cfg.scheme.limiter = parse_limiter(v);
        else if (key == "projection") cfg.scheme.projection = parse_projection(v);
        else if (key == "normalization") cfg.scheme.normalization = parse_normalization(v);
        else if (key == "p2_center_fix") cfg.scheme.p2_center_fix = to_bool(key, v);
        else if (key == "theta") cfg.scheme.theta = to_double(key, v);
        else if (key == "clamp_speeds") cfg.scheme.clamp_speeds = to_bool(key, v);
        else if (key == "dam_y") cfg.dam_y = to_double(key, v);
        else if (key == "depth_up") cfg.depth_up = to_double(key, v);
        else if (key == "depth_down") cfg.depth_down = to_double(key, v);
    }

    if (cfg.case_name.empty() && cfg.surface_file.empty())
        throw ConfigError("case: either 'case' or 'surface_file' is required");
    if (!cfg.case_name.empty() && !cfg.surface_file.empty())
        throw ConfigError("case: give 'case' or 'surface_file', not both");
    if (!cfg.case_name.empty()) {
        const auto tc = find_case(cfg.case_name);
        if (cfg.nx == 0) cfg.nx = tc.nx;
        if (cfg.ny == 0) cfg.ny = tc.ny;
        if (cfg.cfl == 0.0) cfg.cfl = tc.cfl;
    } else if (cfg.cfl == 0.0) {
        cfg.cfl = 0.3;
    }
    if (!(cfg.cfl > 0.0 && cfg.cfl < 0.5)) throw ConfigError("cfl: must lie in (0, 0.5), got " + brief(cfg.cfl));
    if (cfg.nx < 3) throw ConfigError("nx: must be >= 3");
    if (cfg.ny < 3) throw ConfigError("ny: must be >= 3");
    if (cfg.t_end < 0.0) throw ConfigError("t_end: must be >= 0");
    if (cfg.snapshots < 0) throw ConfigError("snapshots: must be >= 0");
    if (cfg.diag_interval < 1) throw ConfigError("diag_interval: must be >= 1");
    if (cfg.scheme.theta < 0.0) throw ConfigError("theta: must be >= 0");
    if (!(cfg.depth_up >= 0.0) || !(cfg.depth_down >= 0.0)) throw ConfigError("depth_up/depth_down: must be >= 0");

    const Domain d = case_domain(cfg);
    const double dx = (d.xmax - d.xmin) / cfg.nx, dy = (d.ymax - d.ymin) / cfg.ny;
    if (std::abs(dx - dy) > 1e-12 * std::max(dx, dy))
        throw ConfigError("nx/ny: cells must be square, got dx=" + brief(dx) + " dy=" + brief(dy));
    return cfg;
}

TestCase make_case(const SimulationConfig& cfg) {
    if (cfg.surface_file.empty()) return find_case(cfg.case_name);
    const GridSurface gs = GridSurface::read(cfg.surface_file);
    TestCase tc;
    tc.name = "custom";
    tc.surface = gs.height_field();
    tc.domain = gs.domain;
    const double y0 = cfg.dam_y, up = cfg.depth_up, down = cfg.depth_down;
    tc.initial = [=](double, double y) { return ConservedState{y < y0 ? up : down, 0.0, 0.0}; };
    tc.cfl = cfg.cfl;
    tc.nx = cfg.nx;
    tc.ny = cfg.ny;
    return tc;
}

RunConfig make_run_config(const SimulationConfig& cfg, const TestCase& tc) {
    RunConfig rc;
    rc.nx = cfg.nx ? cfg.nx : tc.nx;
    rc.ny = cfg.ny ? cfg.ny : tc.ny;
    rc.cfl = cfg.cfl > 0.0 ? cfg.cfl : tc.cfl;
    rc.t_end = cfg.t_end;
    rc.scheme = cfg.scheme;
    rc.diag_interval = cfg.diag_interval;
    rc.max_steps = cfg.max_steps;
    if (!cfg.snapshot_times.empty()) {
        rc.output_times = cfg.snapshot_times;
    } else {
        for (int k = 1; k <= cfg.snapshots; ++k) rc.output_times.push_back(cfg.t_end * k / (cfg.snapshots + 1));
    }
    return rc;
}

std::string resolve_output_dir(const std::string& configured) {
    if (const char* env = std::getenv("ISWE_OUTPUT_DIR"); env && *env) return env;
    return configured;
}

void write_snapshot_csv(const std::string& path, const Field& U, const MetricGrid& G) {
    auto out = open_out(path);
    out << "x,y,B,eta,q1,q2\n";
    for (int j = 0; j < G.ny; ++j)
        for (int i = 0; i < G.nx; ++i)
            out << num(G.xc(i)) << ',' << num(G.yc(j)) << ',' << num(G.bottom(i, j)) << ',' << num(U(0, i, j))
                << ',' << num(U(1, i, j)) << ',' << num(U(2, i, j)) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_snapshot_vtk(const std::string& path, const Field& U, const MetricGrid& G) {
    auto out = open_out(path);
    const long n = long(G.nx) * G.ny;
    out << "# vtk DataFile Version 3.0\n"
        << "iswe snapshot\n"
        << "ASCII\n"
        << "DATASET STRUCTURED_GRID\n"
        << "DIMENSIONS " << G.nx << ' ' << G.ny << " 1\n"
        << "POINTS " << n << " double\n";
    for (int j = 0; j < G.ny; ++j)
        for (int i = 0; i < G.nx; ++i)
            out << num(G.xc(i)) << ' ' << num(G.yc(j)) << ' ' << num(G.bottom(i, j)) << '\n';
    out << "POINT_DATA " << n << '\n';
    auto scalars = [&](const char* name, auto value) {
        out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (int j = 0; j < G.ny; ++j)
            for (int i = 0; i < G.nx; ++i) out << num(value(i, j)) << '\n';
    };
    scalars("eta", [&](int i, int j) { return U(0, i, j); });
    scalars("q1", [&](int i, int j) { return U(1, i, j); });
    scalars("q2", [&](int i, int j) { return U(2, i, j); });
    scalars("B", [&](int i, int j) { return G.bottom(i, j); });
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<SnapshotRow> read_snapshot_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    std::getline(in, line);
    if (trim(line) != "x,y,B,eta,q1,q2") throw std::runtime_error(path + ": unexpected header '" + line + "'");
    std::vector<SnapshotRow> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        SnapshotRow r{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &r.x, &r.y, &r.B, &r.eta, &r.q1, &r.q2) != 6)
            throw std::runtime_error(path + ": malformed row '" + line + "'");
        rows.push_back(r);
    }
    return rows;
}

namespace {

void diag_header(std::ostream& out) { out << "t,mass,l1_s2,l1_s3,max_speed,dt,steps\n"; }

void diag_row(std::ostream& out, const Diagnostics& d) {
    out << num(d.t) << ',' << num(d.mass) << ',' << num(d.l1_s2) << ',' << num(d.l1_s3) << ','
        << num(d.max_speed) << ',' << num(d.dt) << ',' << d.steps << '\n';
}

}  // namespace

void write_diagnostics(const std::vector<Diagnostics>& series, const std::string& path) {
    auto out = open_out(path);
    diag_header(out);
    for (const auto& d : series) diag_row(out, d);
    if (!out) throw std::runtime_error("write failed: " + path);
}

FileObserver::FileObserver(std::string dir, SnapshotFormat fmt) : dir_(std::move(dir)), fmt_(fmt) {
    std::filesystem::create_directories(dir_);
    index_ = open_out(dir_ + "/snapshots.csv");
    index_ << "index,t,file\n";
    diag_ = open_out(dir_ + "/diagnostics.csv");
    diag_header(diag_);
}

void FileObserver::snapshot(double t, const Field& U, const MetricGrid& G) {
    char base[32];
    std::snprintf(base, sizeof base, "snap_%04d", count_);
    if (fmt_ != SnapshotFormat::vtk) write_snapshot_csv(dir_ + "/" + base + ".csv", U, G);
    if (fmt_ != SnapshotFormat::csv) write_snapshot_vtk(dir_ + "/" + base + ".vtk", U, G);
    index_ << count_ << ',' << num(t) << ',' << base << (fmt_ == SnapshotFormat::vtk ? ".vtk" : ".csv") << '\n';
    index_.flush();
    ++count_;
}

void FileObserver::diagnostics(const Diagnostics& d) { diag_row(diag_, d); }

}  // namespace iswe
