#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "covfn/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string output; // stdout + stderr
};

const char* binary() {
    const char* bin = std::getenv("COVFN_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "COVFN_BIN must point at the covfn binary");
    return bin;
}

/// Runs the CLI with the given arguments, capturing combined output.
RunResult run(const std::string& args) {
    static int counter = 0;
    const std::string capture = "covfn_cli_out_" + std::to_string(counter++) + ".txt";
    const std::string cmd = std::string(binary()) + " " + args + " > " + capture + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(capture);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    std::remove(capture.c_str());
    return result;
}

bool mentions(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

/// Writes the running example to a scratch file.
struct Fixture {
    std::string path = "covfn_cli_fixture.json";
    Fixture() {
        std::ofstream(path) << R"({"classes":[{"a":1,"n":2},{"a":2,"n":4},{"a":1,"n":3},)"
                            << R"({"a":2,"n":6},{"a":0,"n":12}]})";
    }
    ~Fixture() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("analyze prints the aggregate picture of the running example") {
    Fixture fx;
    RunResult r = run("analyze " + fx.path);
    CHECK(r.status == 0);
    CHECK(mentions(r.output, "k: 5"));
    CHECK(mentions(r.output, "N: 12"));
    CHECK(mentions(r.output, "mean: 4/3"));
    CHECK(mentions(r.output, "range: {1, 2}"));
    CHECK(mentions(r.output, "spread g: 1"));
    CHECK(mentions(r.output, "minimal period: 12"));
    CHECK(mentions(r.output, "maximal moduli: {12} (distinct)"));
    CHECK(mentions(r.output, "constancy window: 12"));
    CHECK(mentions(r.output, "cover: yes"));
}

TEST_CASE("analyze --json is machine readable") {
    Fixture fx;
    RunResult r = run("analyze " + fx.path + " --json");
    CHECK(r.status == 0);
    json j = json::parse(r.output);
    CHECK(j["k"] == 5);
    CHECK(j["N"] == 12);
    CHECK(j["mean"] == "4/3");
    CHECK(j["spread"] == 1);
    CHECK(j["range"] == json::array({1, 2}));
    CHECK(j["cover"] == true);
}

TEST_CASE("verify maps verdicts onto exit codes") {
    Fixture fx;
    CHECK(run("verify --theorem c1.2 " + fx.path).status == 0);

    RunResult vac = run("verify --theorem 1.1 --mod 2 " + fx.path);
    CHECK(vac.status == 2);
    CHECK(mentions(vac.output, "hypothesis-not-satisfied"));

    RunResult pair = run("verify --theorem 1.2 --mod 8 " + fx.path + " " + fx.path);
    CHECK(pair.status == 0);
    CHECK(mentions(pair.output, "matched 0(12) in both systems"));

    RunResult rep = run("verify --theorem 1.3 " + fx.path);
    CHECK(rep.status == 0);
}

TEST_CASE("verify --json emits the report document") {
    Fixture fx;
    RunResult r = run("verify --theorem c1.2 --json " + fx.path);
    CHECK(r.status == 0);
    json j = json::parse(r.output);
    CHECK(j["theorem"] == "c1.2");
    CHECK(j["verdict"] == "consistent");
    CHECK(j["hypothesis"]["satisfied"] == true);
    CHECK(j["items"].size() == 2);
}

TEST_CASE("usage and file problems exit 1") {
    Fixture fx;
    CHECK(run("").status == 1);
    CHECK(run("verify " + fx.path).status == 1);                       // --theorem missing
    CHECK(run("verify --theorem 9.9 " + fx.path).status == 1);         // unknown theorem
    CHECK(run("verify --theorem 1.1 --mod 2 no_such_file.json").status == 1);
    CHECK(run("verify --theorem 1.2 --mod 8 " + fx.path).status == 1); // needs two files

    const std::string bad = "covfn_cli_bad.json";
    std::ofstream(bad) << "{ not json";
    RunResult r = run("analyze " + bad);
    CHECK(r.status == 1);
    CHECK(mentions(r.output, "error:"));
    std::remove(bad.c_str());
}

TEST_CASE("construct writes a reloadable document") {
    const std::string out = "covfn_cli_erdos3.json";
    RunResult r = run("construct erdos --n 3 -o " + out);
    CHECK(r.status == 0);
    CHECK(mentions(r.output, "wrote 5 classes, N = 12"));
    covfn::SystemDocument doc = covfn::load_system(out);
    CHECK(doc.system.size() == 5);
    CHECK(doc.metadata["generator"] == "erdos");
    CHECK(doc.metadata["n"] == 3);
    CHECK(run("verify --theorem c1.2 " + out).status == 0);
    std::remove(out.c_str());

    CHECK(run("construct erdos --n 4").status == 1);

    const std::string classic = "covfn_cli_classic.json";
    CHECK(run("construct classic -o " + classic).status == 0);
    CHECK(covfn::load_system(classic).system.size() == 5);
    std::remove(classic.c_str());
}

TEST_CASE("fuzz runs are deterministic and quiet on success") {
    RunResult a = run("fuzz --theorem 1.1 --seed 42 --count 200");
    RunResult b = run("fuzz --theorem 1.1 --seed 42 --count 200");
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
    CHECK(mentions(a.output, "FALSIFIED=0"));

    CHECK(run("fuzz --theorem 1.2 --seed 3 --count 100").status == 0);
    CHECK(run("fuzz --theorem 1.3 --seed 4 --count 100").status == 0);
    CHECK(run("fuzz --theorem c1.1 --seed 5 --count 100").status == 0);
    CHECK(run("fuzz --theorem c1.2 --seed 6 --count 100").status == 0);
    CHECK(run("fuzz --count 0 --seed 9").status == 0);
}

TEST_CASE("expsum reports the cyclotomic element and identity") {
    Fixture fx;
    RunResult r = run("expsum " + fx.path + " --c 1 --d 12");
    CHECK(r.status == 0);
    CHECK(mentions(r.output, "order: 12"));
    CHECK(mentions(r.output, "element: 1"));
    CHECK(mentions(r.output, "fourier identity: true"));

    RunResult zero = run("expsum " + fx.path + " --c 1 --d 2");
    CHECK(zero.status == 0);
    CHECK(mentions(zero.output, "element: 0"));
    CHECK(mentions(zero.output, "every m"));

    // alpha = 1 is an integer: rejected as usage error.
    CHECK(run("expsum " + fx.path + " --c 2 --d 2").status == 1);
}
