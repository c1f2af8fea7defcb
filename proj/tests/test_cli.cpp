#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ontic/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ontic::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("ontic_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("simulate prints the phase sweep") {
    Run r = run({"simulate", "--a2", "1/3", "--chi", "0,pi"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("chi,P3,P4,P2\n", 0) == 0);
    Run j = run({"simulate", "--a2", "1/3", "--chi", "0,pi", "--format", "json"});
    REQUIRE(j.code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["sweep"][0]["P3"]["exact"] == "2/3");
    CHECK(doc["sweep"][1]["P4"]["exact"] == "2/3");
    CHECK(doc["sweep"][1]["P2"]["exact"] == "1/3");
}

TEST_CASE("simulate writes files") {
    fs::path dir = scratch("sim");
    Run r = run({"simulate", "--chi", "0,pi/2,pi", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "sweep.csv"));
    CHECK(fs::exists(dir / "joint.csv"));
    json doc = json::parse(slurp(dir / "simulate.json"));
    CHECK(doc["sweep"].size() == 3);
    CHECK(doc["sweep"][2]["P3"]["exact"] == "0");
    fs::remove_all(dir);
}

TEST_CASE("usage and hypothesis errors exit 1") {
    Run bad = run({"simulate", "--a2", "0.6"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("hypothesis") != std::string::npos);
    CHECK(run({"simulate", "--a2", "x"}).code == 1);
    CHECK(run({"check", "bell"}).code == 1);
    CHECK(run({"check", "hroi2", "--relax", "locality"}).code == 1);
    CHECK(run({"check", "hroi2", "--chi", "0,pi/2"}).code == 1);
    CHECK(run({"check", "hroi", "--relax", "pip"}).code == 1);
    CHECK(run({"check", "pbr", "--relax", "roi"}).code == 1);
    CHECK(run({"model", "audit", "/nonexistent/model.json"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check hroi2 reports the certificate") {
    fs::path dir = scratch("hroi2");
    Run r = run({"check", "hroi2", "--a2", "1/3", "--format", "json", "--out", dir.string()});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "infeasible");
    CHECK(doc["certificate"]["verified"] == true);
    CHECK(doc["oracle"]["agrees"] == true);
    CHECK(json::parse(slurp(dir / "report.json")) == doc);
    CHECK_FALSE(fs::exists(dir / "witness_model.json"));

    Run relaxed = run({"check", "hroi2", "--relax", "psi_anomic", "--format", "json", "--out", dir.string()});
    REQUIRE(relaxed.code == 0);
    CHECK(json::parse(relaxed.out)["status"] == "feasible");
    CHECK(fs::exists(dir / "witness_model.json"));
    Run audit = run({"model", "audit", (dir / "witness_model.json").string()});
    REQUIRE(audit.code == 0);
    CHECK(json::parse(audit.out)["reproduces"] == true);
    fs::remove_all(dir);
}

TEST_CASE("check text output") {
    Run r = run({"check", "hroi"});
    CHECK(r.code == 0);
    CHECK(r.out.find("max overlap: 0") != std::string::npos);
    Run p = run({"check", "pbr"});
    CHECK(p.code == 0);
    CHECK(p.out.find("status: contradiction") != std::string::npos);
}

TEST_CASE("counterexample, lift and audit round trip") {
    fs::path dir = scratch("model");
    REQUIRE(run({"model", "counterexample", "--a2", "1/3", "--out", dir.string()}).code == 0);
    Run a = run({"model", "audit", (dir / "model.json").string()});
    REQUIRE(a.code == 0);
    json doc = json::parse(a.out);
    CHECK(doc["reproduces"] == true);
    CHECK(doc["assumptions"]["psi_anomic"]["verdict"] == "fail");
    bool found = false;
    for (const auto& o : doc["overlaps"]) {
        if (o["first"] == "psi_plus" && o["second"] == "psi_0") {
            found = true;
            CHECK(o["mass"] == "1");
        }
    }
    CHECK(found);

    REQUIRE(run({"model", "lift", (dir / "model.json").string(), "--out", dir.string()}).code == 0);
    json lifted = json::parse(run({"model", "audit", (dir / "lifted.json").string()}).out);
    CHECK(lifted["reproduces"] == true);
    CHECK(lifted["assumptions"]["psi_anomic"]["verdict"] == "pass");
    CHECK(lifted["assumptions"]["roi"]["verdict"] == "fail");
    CHECK(lifted["psi_ontic"] == true);
    for (const auto& o : lifted["overlaps"]) CHECK(o["mass"] == "0");
    fs::remove_all(dir);
}

TEST_CASE("config files mirror flags") {
    fs::path dir = scratch("config");
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << R"({"a2": "1/4", "relax": ["roi"], "format": "json"})";
    }
    Run r = run({"check", "hroi", "--config", (dir / "cfg.json").string()});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["parameters"]["a2"] == "1/4");
    CHECK(doc["max_overlap"] == "1/2");
    {
        std::ofstream cfg(dir / "bad.json");
        cfg << R"({"a2": "1/4", "colour": "blue"})";
    }
    CHECK(run({"check", "hroi", "--config", (dir / "bad.json").string()}).code == 1);
    fs::remove_all(dir);
}

TEST_CASE("the installed binary maps exit codes") {
    const std::string exe = ONTIC_CLI_PATH;
    auto status = [&](const std::string& args) {
        int raw = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("check hroi2 --a2 1/4") == 0);
    CHECK(status("simulate --a2 3/5") == 1);
    CHECK(status("frobnicate") == 1);
}
