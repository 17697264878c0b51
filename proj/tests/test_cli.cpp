#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef TRIAS_CLI_PATH
#define TRIAS_CLI_PATH "trias"
#endif
#ifndef TRIAS_ROOT
#define TRIAS_ROOT "."
#endif

namespace {

using Json = nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int seq = 0;
    std::string out = "/tmp/trias_cli_test_" + std::to_string(++seq) + ".out";
    std::string cmd = std::string(TRIAS_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
    int st = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.out = slurp(out);
    std::remove(out.c_str());
    return r;
}

std::string data(const std::string& name) {
    return std::string(TRIAS_ROOT) + "/tests/data/" + name;
}

// reports embed a generation timestamp; golden comparison is byte-exact on
// everything else
std::string drop_timestamp_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.find("timestamp") == std::string::npos) out += line + "\n";
    return out;
}

void check_against_golden(const std::string& args, const std::string& golden_name) {
    auto r = run_cli(args);
    CHECK(r.code == 0);
    std::string golden = slurp(std::string(TRIAS_ROOT) + "/tests/golden/" + golden_name);
    REQUIRE_FALSE(golden.empty());
    CHECK(drop_timestamp_lines(r.out) == drop_timestamp_lines(golden));
}

}  // namespace

TEST_CASE("clean checks exit 0 with no findings") {
    auto r = run_cli("check " + data("trias1_3.json"));
    REQUIRE(r.code == 0);
    Json d = Json::parse(r.out);
    CHECK(d["exit"] == 0);
    CHECK(d["findings"].empty());
    CHECK(d["payload"]["passed"] == 11);
    CHECK(d["payload"]["total"] == 11);
    CHECK(d["command"] == "check " + data("trias1_3.json"));
}

TEST_CASE("axiom violations exit 1 and name the failing identities") {
    auto r = run_cli("check " + data("bad_dim1.json"));
    REQUIRE(r.code == 1);
    Json d = Json::parse(r.out);
    std::vector<std::string> failing;
    for (const auto& row : d["payload"]["identities"])
        if (row["status"] == "fail") failing.push_back(row["identity"]);
    CHECK(failing == std::vector<std::string>{"D2", "T2"});
    REQUIRE(d["findings"].size() == 2);
    for (const auto& f : d["findings"]) {
        CHECK(f["kind"] == "identity-violation");
        CHECK(f["first_assignment"] == "(x, x, x)");
    }
    // the violation reproduces with the concrete basis instance
    auto row = d["payload"]["identities"][3];  // D2 in canonical order
    CHECK(row["identity"] == "D2");
    CHECK(row["violations"][0]["lhs"] != row["violations"][0]["rhs"]);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run_cli("check /tmp/no_such_file_439.json").code == 2);
    CHECK(run_cli("check " + data("malformed.json")).code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("catalog show Trias_7^1").code == 2);
    CHECK(run_cli("enumerate --vdash As_2^2").code == 2);             // needs a finite field
    CHECK(run_cli("cross-check --vdash As_2^2 --field Qi").code == 2);
    CHECK(run_cli("audit --dim 2 --params all").code == 2);           // "all" needs Fp
    CHECK(run_cli("audit --dim 2 --params sample:0 --field Fp:5").code == 2);
    CHECK(run_cli("solve --vdash As_3^1").code == 2);
    CHECK(run_cli("catalog instantiate Trias_2^4 --params alpha=0").code == 2);
    CHECK(run_cli("catalog instantiate Trias_2^4 --params bogus").code == 2);
    CHECK(run_cli("dsl parse --expr \"x |- y = z\"").code == 2);
    CHECK(run_cli("dsl parse").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("check --help").code == 0);
}

TEST_CASE("catalog listing and instantiation") {
    auto r = run_cli("catalog list");
    REQUIRE(r.code == 0);
    Json d = Json::parse(r.out);
    CHECK(d["payload"]["total"] == 45);
    CHECK(d["payload"]["associative"].size() == 9);

    // bare algebra JSON, not a report envelope
    auto inst = run_cli("catalog instantiate Trias_2^14 --params "
                        "alpha_1=0,alpha_2=1,beta=1,gamma=1");
    REQUIRE(inst.code == 0);
    Json a = Json::parse(inst.out);
    CHECK(!a.contains("version"));
    CHECK(a["dim"] == 2);
    CHECK(a["provenance"]["class"] == "Trias_2^14");
    std::string f = "/tmp/trias_cli_inst.json";
    std::ofstream(f) << inst.out;
    CHECK(run_cli("check " + f).code == 0);
    std::remove(f.c_str());

    // complex parameter values use the re,im spelling: gamma=0,1 is i
    auto cplx = run_cli("catalog instantiate Trias_2^14 --params "
                        "alpha_1=0,alpha_2=-1,beta=1,gamma=0,1");
    REQUIRE(cplx.code == 0);
    Json c = Json::parse(cplx.out);
    CHECK(c["provenance"]["params"]["gamma"] == "0,1");
    CHECK(c.dump().find("[\"0\",\"1\"]") != std::string::npos);
}

TEST_CASE("validation over the rationals reports the documented failures") {
    auto r = run_cli("catalog validate --dim 2 --samples 3");
    REQUIRE(r.code == 1);
    Json d = Json::parse(r.out);
    CHECK(d["payload"]["classes_total"] == 42);
    CHECK(d["payload"]["classes_passed"] == 36);
    std::vector<std::string> failing;
    for (const auto& e : d["payload"]["entries"])
        if (e["status"] == "fail") failing.push_back(e["id"]);
    CHECK(failing == std::vector<std::string>{"Trias_2^4", "Trias_2^5", "Trias_2^18",
                                              "Trias_2^21", "Trias_2^22", "Trias_2^23"});
    for (const auto& f : d["findings"]) {
        CHECK(f["kind"] == "identity-violation");
        CHECK(f["instance"].contains("params"));
        CHECK(f["instance"].contains("assignment"));
    }
}

TEST_CASE("enumerate writes one bare algebra per line") {
    auto r = run_cli("enumerate --vdash As_2^2 --field Fp:2");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    size_t count = 0;
    while (std::getline(in, line)) {
        Json a = Json::parse(line);
        CHECK(a["dim"] == 2);
        CHECK(a["field"]["p"] == 2);
        ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("iso decides files and rejects mixed fields") {
    std::string a = "/tmp/trias_cli_iso_a.json", b = "/tmp/trias_cli_iso_b.json";
    std::ofstream(a) << run_cli("catalog instantiate Trias_2^25 --field Fp:5").out;
    std::ofstream(b) << run_cli("catalog instantiate Trias_2^26 --field Fp:5").out;
    auto r = run_cli("iso " + a + " " + b);
    REQUIRE(r.code == 0);
    Json d = Json::parse(r.out);
    CHECK(d["payload"]["result"] == "NotIsomorphic");
    CHECK(d["payload"]["method"] == "exhaustive");

    auto same = run_cli("iso " + a + " " + a);
    CHECK(Json::parse(same.out)["payload"]["result"] == "Isomorphic");
    CHECK(Json::parse(same.out)["payload"].contains("witness"));

    std::string q = "/tmp/trias_cli_iso_q.json";
    std::ofstream(q) << run_cli("catalog instantiate Trias_2^25").out;
    CHECK(run_cli("iso " + a + " " + q).code == 2);        // Fp vs Qi
    CHECK(run_cli("iso " + q + " " + q + " --exhaustive").code == 2);
    for (const auto& f : {a, b, q}) std::remove(f.c_str());
}

TEST_CASE("audit reports collisions as findings and exits 1") {
    auto r = run_cli("audit --dim 2 --field Fp:5 --params sample:2");
    REQUIRE(r.code == 1);
    Json d = Json::parse(r.out);
    CHECK(d["payload"]["instances"] == 70);
    CHECK(d["payload"]["collisions"].size() == 54);
    CHECK(d["payload"]["within_class"].size() == 10);
    CHECK(d["payload"]["unknown"].empty());
    CHECK(d["payload"]["grouping_ok"] == true);
    size_t collisions = 0;
    for (const auto& f : d["findings"])
        if (f["kind"] == "iso-collision") ++collisions;
    CHECK(collisions == 54);
    for (const auto& c : d["payload"]["collisions"]) {
        CHECK(c.contains("witness"));
        CHECK(c.contains("lift"));
    }
}

TEST_CASE("audit output is identical across worker counts") {
    auto r1 = run_cli("audit --dim 2 --field Fp:5 --params sample:2 --jobs 1");
    auto r4 = run_cli("audit --dim 2 --field Fp:5 --params sample:2 --jobs 4");
    CHECK(r1.code == 1);
    CHECK(r4.code == 1);
    // the command echo necessarily differs; everything else must be identical
    Json d1 = Json::parse(r1.out), d4 = Json::parse(r4.out);
    d1.erase("command");
    d1.erase("timestamp");
    d4.erase("command");
    d4.erase("timestamp");
    CHECK(d1 == d4);
}

TEST_CASE("cross-check populates completeness findings only when something is missed") {
    auto clean = run_cli("cross-check --vdash As_2^2 --field Fp:2");
    REQUIRE(clean.code == 0);
    Json d = Json::parse(clean.out);
    CHECK(d["payload"]["enumerated"] == 4);
    CHECK(d["payload"]["unmatched_enumerated"] == 0);
    CHECK(d["findings"].empty());

    auto errata = run_cli("cross-check --vdash As_2^1 --field Fp:2");
    REQUIRE(errata.code == 1);
    Json e = Json::parse(errata.out);
    CHECK(e["payload"]["unmatched_enumerated"] == 0);
    CHECK(e["payload"]["never_hit"].size() == 7);
    for (const auto& f : e["findings"]) CHECK(f["kind"] == "invalid-instance");
}

TEST_CASE("dsl parses files with comments and round-trips the axioms") {
    auto r = run_cli("dsl parse " + data("axioms.txt"));
    REQUIRE(r.code == 0);
    Json d = Json::parse(r.out);
    CHECK(d["payload"]["count"] == 11);
    for (const auto& id : d["payload"]["identities"]) {
        auto again = run_cli("dsl parse --expr \"" + id["rendered"].get<std::string>() + "\"");
        CHECK(again.code == 0);
        CHECK(Json::parse(again.out)["payload"]["identities"][0]["rendered"] == id["rendered"]);
    }
}

TEST_CASE("reports write to a file with -o") {
    std::string f = "/tmp/trias_cli_o.json";
    auto r = run_cli("catalog list --dim 1 -o " + f);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    Json d = Json::parse(slurp(f));
    CHECK(d["payload"]["total"] == 3);
    std::remove(f.c_str());
}

TEST_CASE("golden: dimension-one validation report") {
    check_against_golden("catalog validate --dim 1", "catalog_validate_dim1_qi.json");
}

TEST_CASE("golden: constraint solve replay") {
    check_against_golden("solve --vdash As_2^2", "solve_as2_2.json");
}

TEST_CASE("golden: finite-field cross-check") {
    check_against_golden("cross-check --vdash As_2^2 --field Fp:2", "crosscheck_as2_2_f2.json");
}
