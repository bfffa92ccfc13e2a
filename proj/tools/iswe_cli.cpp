// Command-line entry point: run, catalog, convergence, scalar-oracle.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "iswe/cli_io.hpp"
#include "iswe/scalar_monotone.hpp"
#include "iswe/simulation_driver.hpp"

using namespace iswe;

namespace {

const char* side(BoundaryKind k) { return k == BoundaryKind::noflow ? "noflow" : "outlet"; }

std::map<std::string, std::string> split_overrides(const std::vector<std::string>& items) {
    std::map<std::string, std::string> kv;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + item + "': expected key=value");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& overrides) {
    std::map<std::string, std::string> file_values;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot read config file " + config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        file_values = parse_key_values(ss.str());
    }
    const SimulationConfig cfg = parse_config(file_values, split_overrides(overrides));
    const TestCase tc = make_case(cfg);
    const RunConfig rc = make_run_config(cfg, tc);
    const std::string dir = resolve_output_dir(cfg.output_dir);

    FileObserver obs(dir, cfg.format);
    std::printf("case %s  grid %dx%d  cfl %.3g  t_end %.6g  -> %s\n", tc.name.c_str(), rc.nx, rc.ny, rc.cfl,
                rc.t_end, dir.c_str());
    const RunResult r = run(tc, rc, &obs);
    const double m0 = r.series.front().mass;
    std::printf("steps %ld  t %.6g  mass drift %.3e  l1_s2 %.3e  l1_s3 %.3e\n", r.last.steps, r.last.t,
                m0 > 0 ? (r.last.mass - m0) / m0 : 0.0, r.last.l1_s2, r.last.l1_s3);
    return 0;
}

int cmd_catalog() {
    for (const auto& c : catalog()) {
        std::printf("%-17s surface=%-17s domain=[%g,%g]x[%g,%g] grid=%dx%d cfl=%.2f bc(W,E,S,N)=%s,%s,%s,%s times=",
                    c.name.c_str(), c.surface.label.c_str(), c.domain.xmin, c.domain.xmax, c.domain.ymin,
                    c.domain.ymax, c.nx, c.ny, c.cfl, side(c.boundary.west), side(c.boundary.east),
                    side(c.boundary.south), side(c.boundary.north));
        for (std::size_t k = 0; k < c.reference_times.size(); ++k)
            std::printf("%s%g", k ? "," : "", c.reference_times[k]);
        std::printf("\n");
    }
    return 0;
}

void print_sweep(const char* title, const std::vector<int>& sizes, const std::vector<double>& errs) {
    std::printf("%s\n%8s %14s %8s\n", title, "cells", "L1 error", "order");
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (k == 0)
            std::printf("%8d %14.6e %8s\n", sizes[k], errs[k], "-");
        else
            std::printf("%8d %14.6e %8.3f\n", sizes[k], errs[k], std::log2(errs[k - 1] / errs[k]));
    }
}

int cmd_convergence(const std::string& which, int levels, double cfl, const SchemeOptions& scheme) {
    if (which == "stoker" || which == "both") {
        std::vector<int> sizes;
        std::vector<double> errs;
        for (int k = 0, n = 100; k < levels; ++k, n *= 2) {
            sizes.push_back(n);
            errs.push_back(stoker_l1_error(n, cfl, scheme));
        }
        print_sweep("flat-bottom dam break vs exact, t = 0.5 s, y > 0.5", sizes, errs);
    }
    if (which == "bump" || which == "both") {
        SchemeOptions s = scheme;
        s.reconstruction = Reconstruction::muscl;
        std::vector<int> sizes;
        std::vector<double> errs;
        for (int k = 0, n = 32; k < levels; ++k, n *= 2) {
            sizes.push_back(n);
            errs.push_back(advected_bump_l1_error(n, cfl, s));
        }
        print_sweep("MUSCL advected smooth field, t = 0.5", sizes, errs);
    }
    return 0;
}

int cmd_scalar_oracle(const std::string& flux, int n, int steps, double cfl) {
    if (n < 3) throw ConfigError("n: must be >= 3");
    const ScalarProblem prob = flux == "burgers" ? burgers() : linear_advection(1.0, 0.5);
    if (flux != "burgers" && flux != "advection") throw ConfigError("flux: expected advection|burgers");
    const double h = 1.0 / n, pi = std::numbers::pi;

    ScalarGrid g{n, n, std::vector<double>(static_cast<std::size_t>(n) * n)};
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double x = (i + 0.5) * h, y = (j + 0.5) * h;
            g.at(i, j) = 1.0 + 0.5 * std::sin(2 * pi * x) * std::cos(2 * pi * y) + (x < 0.5 && y < 0.5 ? 0.5 : 0.0);
        }
    }
    Field u = to_field(g);
    const SchemeOptions opts = SchemeOptions::literal();
    double worst = 0.0;
    for (int s = 0; s < steps; ++s) {
        const StepResult le = scalar_le_step(u, prob, opts, h, cfl);
        const ScalarGrid mono = monotone_step(to_grid(u), prob, le.dt, h, opts.eps);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(le.U(0, i, j) - mono.at(i, j)));
        u = to_field(to_grid(le.U));
    }
    std::printf("%s %dx%d, %d steps: max |LE - monotone form| = %.3e\n", prob.name.c_str(), n, n, steps, worst);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intrinsic shallow-water solver on curved bottoms"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    auto* run_cmd = app.add_subcommand("run", "Run a simulation");
    run_cmd->add_option("-c,--config", config_path, "key = value config file");
    run_cmd->add_option("overrides", overrides, "key=value overrides");

    app.add_subcommand("catalog", "List the built-in test cases");

    std::string which = "both", recon_limiter = "minmod";
    int levels = 2;
    double conv_cfl = 0.45;
    auto* conv_cmd = app.add_subcommand("convergence", "Grid-doubling sweep");
    conv_cmd->add_option("--test", which, "stoker|bump|both")->check(CLI::IsMember({"stoker", "bump", "both"}));
    conv_cmd->add_option("--levels", levels, "number of grids")->check(CLI::Range(2, 6));
    conv_cmd->add_option("--cfl", conv_cfl, "CFL number")->check(CLI::Range(1e-6, 0.4999999));
    conv_cmd->add_option("--limiter", recon_limiter, "minmod|mc|vanleer");

    std::string flux = "advection";
    int n = 64, steps = 50;
    double oracle_cfl = 0.45;
    auto* oracle_cmd = app.add_subcommand("scalar-oracle", "Compare the LE pipeline with the monotone form");
    oracle_cmd->add_option("--flux", flux, "advection|burgers")->check(CLI::IsMember({"advection", "burgers"}));
    oracle_cmd->add_option("--n", n, "cells per side");
    oracle_cmd->add_option("--steps", steps, "time steps");
    oracle_cmd->add_option("--cfl", oracle_cfl, "CFL number")->check(CLI::Range(1e-6, 0.4999999));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return cmd_run(config_path, overrides);
        if (app.got_subcommand("catalog")) return cmd_catalog();
        if (*conv_cmd) {
            SchemeOptions s;
            s.limiter = parse_limiter(recon_limiter);
            return cmd_convergence(which, levels, conv_cfl, s);
        }
        if (*oracle_cmd) return cmd_scalar_oracle(flux, n, steps, oracle_cfl);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
