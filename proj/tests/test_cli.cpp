#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hallwc/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string text;
    json record;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hallwc_cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = hallwc::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    Run r{code, out.str(), json()};
    if (!r.text.empty()) r.record = json::parse(r.text);
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    const auto p = std::filesystem::temp_directory_path() / ("hallwc_test_" + name);
    std::ofstream(p) << body;
    return p;
}

const char* kSimpleWall = R"({"bound": [1, 1],
  "hops": [{"wall": {"theta": [0, 0]}, "side": {"theta": [1, 0]}}]})";

}  // namespace

TEST_CASE("quiver-dt") {
    const Run v2 = run({"quiver-dt", "--quiver", "vect", "--dim", "2"});
    CHECK(v2.code == 0);
    CHECK(v2.record["dt"] == "-1/4");
    CHECK(v2.record["regular_at_one"] == true);
    CHECK(v2.record["epsilon"]["text"].is_string());
    CHECK(run({"quiver-dt", "--quiver", "vect", "--dim", "1"}).record["dt"] == "1");
    CHECK(run({"quiver-dt", "--quiver", "a2", "--theta", "1,0", "--dim", "1,1"}).record["dt"] == "1");
    const Run at = run({"quiver-dt", "--quiver", "kronecker2", "--theta", "1,0", "--dim", "1,1", "--q-at", "2"});
    CHECK(at.record["at_q"]["delta"] == "3");
}

TEST_CASE("quiver files") {
    const auto q = write_temp("quiver.json", R"({"vertices": ["a", "b"], "arrows": [["a", "b"]]})");
    const Run r = run({"quiver-dt", "--quiver", q.string(), "--theta", "1,0", "--dim", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.record["dt"] == "1");
    const auto cyc = write_temp("cyclic.json", R"({"vertices": ["a"], "arrows": [["a", "a"]]})");
    const Run bad = run({"quiver-dt", "--quiver", cyc.string(), "--dim", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.record["error"]["kind"] == "NotAcyclic");
}

TEST_CASE("hn-check and wallcross-check") {
    const Run h = run({"hn-check", "--quiver", "kronecker2", "--theta", "1,0", "--dim", "2,2"});
    CHECK(h.code == 0);
    CHECK(h.record["equal"] == true);
    const Run w = run({"wallcross-check", "--quiver", "kronecker2", "--wall-theta", "0,0", "--theta", "1,0",
                       "--dim", "1,1"});
    CHECK(w.code == 0);
    CHECK(w.record["holds"] == true);
    CHECK(w.record["wall_delta"]["text"] == w.record["chamber_sum"]["text"]);
    const Run v = run({"wallcross-check", "--quiver", "a2", "--wall-theta", "1,0", "--theta", "0,1", "--dim", "1,1"});
    CHECK(v.code == 1);
    CHECK(v.record["error"]["kind"] == "DominanceViolated");
}

TEST_CASE("coeffs") {
    const auto p = write_temp("wall.json", kSimpleWall);
    const Run r = run({"coeffs", "--path", p.string()});
    CHECK(r.code == 0);
    CHECK(r.record["S"] == json::parse(R"([{"tuple": [[1,0],[0,1]], "value": "1"}])"));
    CHECK(r.record["Utilde"] == json::parse(R"([{"tuple": [[1,0],[0,1]], "value": "1/2"}])"));
    const Run all = run({"coeffs", "--path", p.string(), "--all"});
    CHECK(all.record["S"].size() == 4);
}

TEST_CASE("vect, residue and weyl") {
    const Run e = run({"vect", "--op", "epsilon", "--n", "2", "--char", "s[1,-1]"});
    CHECK(e.code == 0);
    CHECK(e.record["value"] == "0");
    CHECK(run({"vect", "--op", "product", "--blocks", "1,1", "--char", "s[1,-1] - 3*s[0,0]"}).record["value"] == "-6");
    const Run r = run({"residue", "--f", "1/(1-u)"});
    CHECK(r.record["residue"] == "-1");
    CHECK(r.record["via_expansions"] == r.record["via_principal_part"]);
    CHECK(run({"weyl", "--n", "3", "--lambda", "0,0,0"}).record["constant_term"] == "6");
    CHECK(run({"weyl", "--n", "2", "--lambda", "1,-1"}).record["constant_term"] == "0");
}

TEST_CASE("parse") {
    CHECK(run({"parse", "--ratfunc", "(q-1)/(q^2-1)"}).code == 0);
    CHECK(run({"parse", "--weight", "0,1"}).code == 2);
}

TEST_CASE("input errors exit with code 2") {
    const Run p = run({"parse", "--ratfunc", "2 + * q"});
    CHECK(p.code == 2);
    CHECK(p.record["error"]["kind"] == "ParseError");
    CHECK(run({"quiver-dt", "--quiver", "a2", "--theta", "1", "--dim", "1,1"}).code == 2);
    CHECK(run({"quiver-dt", "--quiver", "nonesuch", "--dim", "1"}).code == 2);
    CHECK(run({"nonesuch"}).code == 2);
    CHECK(run({"weyl", "--n", "7", "--lambda", "0,0,0,0,0,0,0"}).code == 2);
}

TEST_CASE("output is identical for every job count") {
    const std::vector<std::string> base{"vect", "--op", "epsilon", "--n", "3", "--char", "s[1,0,-1]^2"};
    const std::string one = run(base).text;
    for (const char* j : {"1", "2", "4"}) {
        auto args = base;
        args.insert(args.begin(), {"--jobs", j});
        CHECK(run(args).text == one);
    }
}

TEST_CASE("--output writes the record to a file") {
    const auto dest = std::filesystem::temp_directory_path() / "hallwc_test_out.json";
    std::filesystem::remove(dest);
    const Run r = run({"--output", dest.string(), "weyl", "--n", "2", "--lambda", "0,0"});
    CHECK(r.code == 0);
    std::ifstream in(dest);
    CHECK(json::parse(in)["constant_term"] == "2");
}
