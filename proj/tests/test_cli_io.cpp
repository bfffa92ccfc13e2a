#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "iswe/cli_io.hpp"

using namespace iswe;
namespace fs = std::filesystem;

TEST_SUITE("cli_io") {

static fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("iswe_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST_CASE("key = value parsing") {
    const auto kv = parse_key_values("# comment\ncase = parabola\n  nx=40 # trailing\n\nt_end = 50\n");
    CHECK(kv.at("case") == "parabola");
    CHECK(kv.at("nx") == "40");
    CHECK(kv.at("t_end") == "50");
    CHECK_THROWS_AS(parse_key_values("just words\n"), ConfigError);
}

TEST_CASE("parabola benchmark configuration") {
    const auto cfg = parse_config(parse_key_values("case=parabola\nnx=40\nny=400\ncfl=0.30\nt_end=50\n"));
    CHECK(cfg.case_name == "parabola");
    CHECK(cfg.nx == 40);
    CHECK(cfg.ny == 400);
    CHECK(cfg.cfl == 0.30);
    CHECK(cfg.t_end == 50.0);
}

TEST_CASE("command-line values override the file") {
    const auto cfg = parse_config({{"case", "slope"}, {"t_end", "1"}}, {{"t_end", "2.5"}, {"reconstruction", "muscl"}});
    CHECK(cfg.t_end == 2.5);
    CHECK(cfg.scheme.reconstruction == Reconstruction::muscl);
    CHECK(cfg.nx == 40);  // case default
    CHECK(cfg.cfl == 0.20);
}

TEST_CASE("validation errors name the key") {
    auto message = [](const std::map<std::string, std::string>& kv) {
        try {
            parse_config(kv);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message({{"case", "parabola"}, {"cfl", "0.6"}}).find("cfl") != std::string::npos);
    CHECK(message({{"t_end", "1"}}).find("case") != std::string::npos);
    CHECK(message({{"case", "slope"}, {"bogus", "1"}}).find("bogus") != std::string::npos);
    CHECK(message({{"case", "slope"}, {"nx", "2"}}).find("nx") != std::string::npos);
    CHECK(message({{"case", "slope"}, {"nx", "40"}, {"ny", "300"}}).find("square") != std::string::npos);
    CHECK(message({{"case", "slope"}, {"nx", "abc"}}).find("nx") != std::string::npos);
    CHECK(message({{"case", "slope"}, {"format", "png"}}).find("format") != std::string::npos);
}

TEST_CASE("every documented key is accepted") {
    std::map<std::string, std::string> kv{{"case", "bump"}};
    for (const auto& k : config_keys()) CHECK_FALSE(k.empty());
    kv["projection"] = "gather";
    kv["normalization"] = "evolved_area";
    kv["p2_center_fix"] = "false";
    kv["snapshot_times"] = "0.1, 0.2";
    kv["format"] = "both";
    const auto cfg = parse_config(kv);
    CHECK(cfg.scheme.projection == Projection::gather);
    CHECK(cfg.scheme.normalization == Normalization::evolved_area);
    CHECK_FALSE(cfg.scheme.p2_center_fix);
    CHECK(cfg.snapshot_times == std::vector<double>{0.1, 0.2});
    CHECK(cfg.format == SnapshotFormat::both);
}

TEST_CASE("default output cadence") {
    SimulationConfig cfg;
    cfg.case_name = "slope";
    cfg.t_end = 2.1;
    const auto rc = make_run_config(cfg, find_case("slope"));
    CHECK(rc.output_times.size() == 20);
    CHECK(rc.output_times.front() == doctest::Approx(0.1));
    CHECK(rc.nx == 40);
}

TEST_CASE("output directory override") {
    unsetenv("ISWE_OUTPUT_DIR");
    CHECK(resolve_output_dir("out") == "out");
    setenv("ISWE_OUTPUT_DIR", "/tmp/elsewhere", 1);
    CHECK(resolve_output_dir("out") == "/tmp/elsewhere");
    unsetenv("ISWE_OUTPUT_DIR");
}

TEST_CASE("snapshot CSV") {
    const auto dir = scratch("csv");
    const auto G = build_metric_grid(flat_surface(), {0, 1, 0, 1}, 3, 3);
    Field U(3, 3, 3, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) U(0, i, j) = 1.0;
    SUBCASE("flat rest state") {
        write_snapshot_csv((dir / "a.csv").string(), U, G);
        const auto rows = read_snapshot_csv((dir / "a.csv").string());
        CHECK(rows.size() == 9);
        for (const auto& r : rows) CHECK(r.eta == 1.0);
        CHECK(slurp(dir / "a.csv").rfind("x,y,B,eta,q1,q2\n", 0) == 0);
    }
    SUBCASE("round trip is bit exact") {
        U(0, 1, 2) = 1.0 / 3.0;
        U(1, 2, 0) = -std::exp(1.0) * 1e-7;
        U(2, 0, 1) = 123456.789e-13;
        write_snapshot_csv((dir / "b.csv").string(), U, G);
        const auto rows = read_snapshot_csv((dir / "b.csv").string());
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) {
                const auto& r = rows[j * 3 + i];
                CHECK(r.x == G.xc(i));
                CHECK(r.y == G.yc(j));
                CHECK(r.eta == U(0, i, j));
                CHECK(r.q1 == U(1, i, j));
                CHECK(r.q2 == U(2, i, j));
            }
    }
    SUBCASE("unwritable path reports the path") {
        try {
            write_snapshot_csv("/nonexistent_dir/x.csv", U, G);
            FAIL("expected an error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("/nonexistent_dir/x.csv") != std::string::npos);
        }
    }
}

TEST_CASE("snapshot VTK schema") {
    const auto dir = scratch("vtk");
    const auto G = build_metric_grid(slope_surface(), {0, 1, 0, 2}, 3, 6);
    Field U(3, 3, 6, 3);
    write_snapshot_vtk((dir / "a.vtk").string(), U, G);
    std::istringstream in(slurp(dir / "a.vtk"));
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    CHECK(lines[0] == "# vtk DataFile Version 3.0");
    CHECK(lines[2] == "ASCII");
    CHECK(lines[3] == "DATASET STRUCTURED_GRID");
    CHECK(lines[4] == "DIMENSIONS 3 6 1");
    CHECK(lines[5] == "POINTS 18 double");
    CHECK(lines[6 + 18] == "POINT_DATA 18");
    int arrays = 0;
    for (const auto& l : lines)
        if (l.rfind("SCALARS ", 0) == 0) ++arrays;
    CHECK(arrays == 4);
    CHECK(lines.size() == 6 + 18 + 1 + 4 * (2 + 18));
}

TEST_CASE("diagnostics CSV") {
    const auto dir = scratch("diag");
    write_diagnostics({}, (dir / "d.csv").string());
    CHECK(slurp(dir / "d.csv") == "t,mass,l1_s2,l1_s3,max_speed,dt,steps\n");
    Diagnostics d;
    d.t = 0.5;
    d.mass = 12.0;
    d.steps = 7;
    write_diagnostics({d}, (dir / "e.csv").string());
    CHECK(slurp(dir / "e.csv") == "t,mass,l1_s2,l1_s3,max_speed,dt,steps\n0.5,12,0,0,0,0,7\n");
}

TEST_CASE("file observer writes an indexed run") {
    const auto dir = scratch("run");
    const auto cfg = parse_config({{"case", "bump"}, {"nx", "12"}, {"ny", "12"}, {"t_end", "0.05"}, {"snapshots", "2"}});
    const auto tc = make_case(cfg);
    const auto rc = make_run_config(cfg, tc);
    {
        FileObserver obs(dir.string(), SnapshotFormat::both);
        run(tc, rc, &obs);
    }
    CHECK(fs::exists(dir / "snap_0000.csv"));
    CHECK(fs::exists(dir / "snap_0000.vtk"));
    CHECK(fs::exists(dir / "snap_0003.csv"));
    std::istringstream idx(slurp(dir / "snapshots.csv"));
    std::string line;
    int n = 0;
    while (std::getline(idx, line)) ++n;
    CHECK(n == 5);
    const auto diag = slurp(dir / "diagnostics.csv");
    CHECK(diag.rfind("t,mass,l1_s2,l1_s3,max_speed,dt,steps\n", 0) == 0);
}

TEST_CASE("custom surface file with a dam") {
    const auto dir = scratch("surface");
    {
        std::ofstream out(dir / "s.txt");
        out << "2 2 0 1 0 4\n0 0 0.4 0.4\n";
    }
    const auto cfg = parse_config({{"surface_file", (dir / "s.txt").string()}, {"nx", "5"}, {"ny", "20"},
                                   {"dam_y", "1.0"}, {"t_end", "0.01"}});
    const auto tc = make_case(cfg);
    CHECK(tc.name == "custom");
    CHECK(tc.initial(0.5, 0.5)[0] == 2.0);
    CHECK(tc.initial(0.5, 1.5)[0] == 1.0);
    CHECK(tc.surface.eval(0.5, 2.0) == doctest::Approx(0.2));
    const auto r = run(tc, make_run_config(cfg, tc));
    CHECK(r.last.t == doctest::Approx(0.01));
}

}
