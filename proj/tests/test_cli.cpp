#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int code;
    std::string out;
};

// run the installed binary, capture stdout; stderr is dropped so usage
// errors stay quiet in test logs
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HEXAKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "hexakit_cli_test";
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

const char* kQuadLens = R"({
 "version": 1,
 "vertices": [[-1.0, 0.0], [1.0, 0.0]],
 "edges": [
  {"v0": 0, "v1": 1, "bulge_area": 1.5},
  {"v0": 0, "v1": 1, "bulge_area": 0.5},
  {"v0": 0, "v1": 1, "bulge_area": -0.5},
  {"v0": 0, "v1": 1, "bulge_area": -1.5}
 ],
 "cells": [
  {"edges": [[0, 1], [1, -1]]},
  {"edges": [[1, 1], [2, -1]]},
  {"edges": [[2, 1], [3, -1]]},
  {"edges": [[3, 1], [0, -1]]}
 ],
 "chambers": [
  {"cells": [3], "exterior": true, "infinite_cell": 3},
  {"cells": [0], "exterior": false},
  {"cells": [1], "exterior": false},
  {"cells": [2], "exterior": false}
 ]
}
)";

} // namespace

TEST_CASE("generate emits stable files that validate") {
    RunResult a = run_cli("generate --N 7");
    RunResult b = run_cli("generate --N 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["version"] == 1);

    fs::path file = scratch_dir() / "flower.json";
    CHECK(run_cli("generate --N 7 --out " + file.string()).code == 0);
    {
        std::ifstream f(file);
        std::string on_disk((std::istreambuf_iterator<char>(f)),
                            std::istreambuf_iterator<char>());
        CHECK(on_disk == a.out);
    }

    RunResult v = run_cli("validate " + file.string());
    CHECK(v.code == 0);
    CHECK(v.out.find("validate: PASS") != std::string::npos);

    RunResult vj = run_cli("validate --json " + file.string());
    CHECK(vj.code == 0);
    json doc = json::parse(vj.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["items"].size() == 8);
}

TEST_CASE("malformed input exits 2") {
    fs::path file = scratch_dir() / "broken.json";
    write_file(file, "{\"version\": 1, \"vertices\": [[0");
    CHECK(run_cli("validate " + file.string()).code == 2);
    CHECK(run_cli("report " + file.string()).code == 2);
    CHECK(run_cli("validate " + (scratch_dir() / "missing.json").string()).code == 2);
}

TEST_CASE("class violations exit 1 and name the condition") {
    fs::path file = scratch_dir() / "quad.json";
    write_file(file, kQuadLens);
    RunResult v = run_cli("validate " + file.string());
    CHECK(v.code == 1);
    CHECK(v.out.find("C3.degree_three: FAIL") != std::string::npos);
    CHECK(v.out.find("C2.edges_two_sided: pass") != std::string::npos);
}

TEST_CASE("smoothed spirals fail the unit-area check only") {
    fs::path file = scratch_dir() / "smooth.json";
    CHECK(run_cli("generate --N 7 --smooth --out " + file.string()).code == 0);
    RunResult vj = run_cli("validate --json " + file.string());
    CHECK(vj.code == 1);
    json doc = json::parse(vj.out);
    CHECK(doc["pass"] == false);
    for (const auto& item : doc["items"]) {
        if (item["name"] == "unit_area.chambers")
            CHECK(item["pass"] == false);
        else
            CHECK(item["pass"] == true);
    }
}

TEST_CASE("report json carries metrics and bound rows") {
    fs::path file = scratch_dir() / "n19.json";
    REQUIRE(run_cli("generate --N 19 --out " + file.string()).code == 0);

    RunResult r = run_cli("report --json " + file.string());
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["n"] == 19);
    CHECK(doc["metrics"]["hex_count"] == 7);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["exists_k_le_5"] == true);
    CHECK(doc["rows"].size() >= 5);

    // a vanishing multiplier makes the hexagon-count bound unreachable
    CHECK(run_cli("report --C0 0.001 " + file.string()).code == 1);
}

TEST_CASE("certify: ledger, tamper hook, scan rows") {
    RunResult c = run_cli("certify");
    CHECK(c.code == 0);
    json doc = json::parse(c.out);
    CHECK(doc["all_certified"] == true);
    CHECK(doc.find("scans") == doc.end());

    CHECK(run_cli("certify --tamper").code == 1);

    RunResult s = run_cli("certify --grid 12");
    CHECK(s.code == 0);
    json sdoc = json::parse(s.out);
    REQUIRE(sdoc.contains("scans"));
    CHECK(sdoc["scans"].size() == 4);
    for (const auto& row : sdoc["scans"])
        CHECK(row["status"] == "heuristic-pass");

    fs::path file = scratch_dir() / "cert.json";
    RunResult w = run_cli("certify --out " + file.string());
    CHECK(w.code == 0);
    CHECK(w.out.find("certified") != std::string::npos);
    std::ifstream f(file);
    std::string on_disk((std::istreambuf_iterator<char>(f)),
                        std::istreambuf_iterator<char>());
    CHECK(json::parse(on_disk)["all_certified"] == true);
}

TEST_CASE("dhex reports per-chamber fits") {
    fs::path file = scratch_dir() / "flower_dhex.json";
    REQUIRE(run_cli("generate --N 7 --out " + file.string()).code == 0);
    RunResult r = run_cli("dhex " + file.string());
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["chambers"].size() == 7);
    CHECK(doc["hex_count"] == 1);
    CHECK(doc["mean_dhex_sq"].get<double>() < 1e-6);
    for (const auto& row : doc["chambers"]) {
        CHECK(row["area"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(row["d_hex"].get<double>() >= 0.0);
    }
}

TEST_CASE("polyiso trials are deterministic in the seed") {
    RunResult a = run_cli("polyiso --random 200 --seed 42");
    RunResult b = run_cli("polyiso --random 200 --seed 42");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["min_margin_rel"].get<double>() >= -1e-9);
    RunResult c = run_cli("polyiso --random 200 --seed 43");
    CHECK(c.code == 0);
    CHECK(c.out != a.out);
}

TEST_CASE("plot produces svg") {
    fs::path file = scratch_dir() / "n3.json";
    REQUIRE(run_cli("generate --N 3 --out " + file.string()).code == 0);
    RunResult r = run_cli("plot " + file.string());
    CHECK(r.code == 0);
    CHECK(r.out.rfind("<?xml version=", 0) == 0);
    CHECK(r.out.find("<svg xmlns=") != std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);
    CHECK(r.out.find("<path d=\"M") != std::string::npos);

    fs::path out = scratch_dir() / "n3.svg";
    CHECK(run_cli("plot " + file.string() + " --out " + out.string()).code == 0);
    CHECK(fs::exists(out));
}

TEST_CASE("usage errors") {
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("generate").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("validate").code == 2);
}
