#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "helpers.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(EXPSOLVE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

json run_record(const std::string& args, const std::string& env = "") {
    RunResult r = run_cli(args + " --format record", env);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

// strip a trailing ellipsis marker so the digits parse as a number
std::string plain(std::string s) {
    auto pos = s.find("…");
    if (pos != std::string::npos) s.erase(pos);
    return s;
}

} // namespace

TEST_CASE("solve-xx record output") {
    json j = run_record("solve-xx 'sqrt(3)-1'");
    CHECK(j["command"] == "solve-xx");
    CHECK(j["count"] == 2);
    CHECK(plain(j["root_lower"]).substr(0, 7) == "0.18461");
    CHECK(plain(j["root_upper"]).substr(0, 7) == "0.58872");
    CHECK(j["root_lower_verdict"] == "transcendental");
    CHECK(j["root_upper_verdict"] == "transcendental");
    CHECK(j["root_upper_rules"].get<std::string>().find("xx-algebraic-powers") !=
          std::string::npos);

    json j2 = run_record("solve-xx '(1/3)^(1/3)'");
    CHECK(j2["root_lower_exact"] == "1/3");
    CHECK(j2["root_upper_verdict"] == "transcendental");
    CHECK(plain(j2["root_upper"]).substr(0, 7) == "0.40354");
}

TEST_CASE("solve-xx below the threshold reports no solution with a citation") {
    RunResult r = run_cli("solve-xx '1/2' --format record");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 0);
    CHECK(j["domain_verdict"] == "out of domain");
    CHECK(j["domain_rules"].get<std::string>().find("xx-no-solution") != std::string::npos);

    RunResult t = run_cli("solve-xx '1/2'");
    CHECK(t.code == 0);
    CHECK(t.out.find("no real solution") != std::string::npos);
    CHECK(t.out.find("0.69220") != std::string::npos);
}

TEST_CASE("curve command, both entry modes") {
    json j = run_record("curve '14+sqrt(2)'");
    CHECK(plain(j["x"]).substr(0, 7) == "2.26748");
    CHECK(plain(j["y"]).substr(0, 7) == "3.34112");
    CHECK(j["pair_verdict"] == "at least one of the pair transcendental");

    json j16 = run_record("curve '16'");
    CHECK(j16["pair_verdict"] == "rational");
    CHECK(j16["pair_witness"] == "2 4");

    json jt = run_record("curve --t 2");
    CHECK(jt["x_exact"] == "9/4");
    CHECK(jt["y_exact"] == "27/8");
    CHECK(jt["value_verdict"] == "algebraic irrational");

    json jh = run_record("curve --t 1/2");
    CHECK(jh["x_exact"] == "3^(1/2)");
    CHECK(jh["y_exact"] == "3^(3/2)");
    CHECK(jh["value_verdict"] == "transcendental");

    RunResult err = run_cli("curve '15'");
    CHECK(err.code == 2);
    RunResult err2 = run_cli("curve '15' --format record");
    CHECK(err2.code == 2);
    json je = json::parse(err2.out);
    CHECK(je["status"] == "domain-error");
    CHECK(je["error"].get<std::string>().find("15.15426") != std::string::npos);

    RunResult both = run_cli("curve '16' --t 1");
    CHECK(both.code == 3);
}

TEST_CASE("tower command") {
    json j = run_record("tower '1/16' --odd-even");
    CHECK(j["mode"] == "split-odd-even");
    CHECK(j["h_odd"] == "0.25");
    CHECK(j["h_even"] == "0.5");
    CHECK(j["h_odd_exact"] == "1/4");
    CHECK(j["h_even_exact"] == "1/2");

    json ji = run_record("tower '1/16' --odd-even --method iteration");
    CHECK(ji["method"] == "iteration");
    double h_odd_it = std::stod(plain(ji["h_odd"]));
    CHECK(std::abs(h_odd_it - 0.25) < 1e-5);
    CHECK(ji["iterations"].get<long>() > 0);

    json j17 = run_record("tower '1/17' --odd-even");
    CHECK(plain(j17["h_odd"]).substr(0, 7) == "0.20427");
    CHECK(plain(j17["h_even"]).substr(0, 7) == "0.56059");
    CHECK(j17["h_odd_verdict"] == "irrational (nature unknown)");
    CHECK(j17["pair_verdict"] == "at least one of the pair transcendental");

    json je = run_record("tower 'e^(1/3)'");
    CHECK(plain(je["h"]).substr(0, 7) == "1.85718");
    CHECK(je["h_verdict"] == "transcendental");

    json jr = run_record("tower 'sqrt(2)'");
    CHECK(jr["h_exact"] == "2");

    json jo = run_record("tower '3/2'");
    CHECK(jo["mode"] == "out-of-domain");
    CHECK(jo["h_verdict"] == "out of domain");

    json jp = run_record("tower 'sqrt(2)' --inverse-power");
    CHECK(jp["h_verdict"] == "algebraic irrational");
    CHECK(jp["h_witness"] == "1/2*sqrt(2)");
    CHECK(plain(jp["h"]).substr(0, 7) == "0.70710");
}

TEST_CASE("rational subcommands") {
    json j = run_record("rational qq '-1/2'");
    CHECK(j["tag"] == "non-real");
    json j2 = run_record("rational qq '3'");
    CHECK(j2["tag"] == "rational");
    CHECK(j2["value"] == "27");
    json j3 = run_record("rational curvepoint 1");
    CHECK(j3["x"] == "2");
    CHECK(j3["y"] == "4");
    json j4 = run_record("rational towerfix '1/16'");
    CHECK(j4["count"] == 2);
    CHECK(j4["solutions"] == "1/4 1/2");
    json j5 = run_record("rational towerfix '1/2'");
    CHECK(j5["count"] == 0);
}

TEST_CASE("classify command cites its rules") {
    json j = run_record("classify 'e^(1/3)'");
    CHECK(j["nature_verdict"] == "transcendental");
    CHECK(j["nature_rules"].get<std::string>().find("hermite-lindemann") != std::string::npos);

    json j2 = run_record("classify '(1/3)^(1/3)'");
    CHECK(j2["nature_verdict"] == "algebraic irrational");

    json j3 = run_record("classify 'sqrt(27)'");
    CHECK(j3["input_canonical"] == "3*sqrt(3)");
    CHECK(j3["nature_verdict"] == "algebraic irrational");

    RunResult text = run_cli("classify 'e^(1/3)'");
    CHECK(text.out.find("hermite-lindemann") != std::string::npos);
    CHECK(text.out.find("transcendental") != std::string::npos);
}

TEST_CASE("exit codes: 3 for parse errors, 2 for domain errors") {
    CHECK(run_cli("solve-xx '2//3'").code == 3);
    CHECK(run_cli("solve-xx 'e+1'").code == 3);
    CHECK(run_cli("classify 'sqrt(2)+sqrt(3)'").code == 3);
    CHECK(run_cli("rational qq '0'").code == 2);
    CHECK(run_cli("classify '0^(0)'").code == 2);
    CHECK(run_cli("tower '0-1'").code == 2);
    CHECK(run_cli("nonsense").code == 3);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("text and record outputs agree on numeric values") {
    json j = run_record("solve-xx '2'");
    RunResult text = run_cli("solve-xx '2'");
    CHECK(text.out.find(j["root_upper"].get<std::string>()) != std::string::npos);
}

TEST_CASE("precision and digit flags, env overrides") {
    json j = run_record("tower '1/2' --digits 10");
    CHECK(plain(j["h"]).size() >= 11);  // 0. + 10 digits
    json via_env = run_record("tower '1/2'", "EXPSOLVE_DIGITS=10");
    CHECK(plain(j["h"]) == plain(via_env["h"]));
    json j6 = run_record("tower '1/2'");
    CHECK(plain(j6["h"]) == "0.641185");  // default 6 significant digits

    json hi = run_record("solve-xx '2' --precision 256 --digits 40");
    CHECK(plain(hi["root_upper"]).size() >= 40);
}

TEST_CASE("schanuel upgrades are opt-in") {
    json j = run_record("curve '17' --assume-schanuel");
    CHECK(j["pair_verdict"] == "conditionally transcendental (Schanuel)");
    CHECK(j["pair_rules"].get<std::string>().find("schanuel-upgrade") != std::string::npos);
    CHECK(j["pair_rules"].get<std::string>().find("curve-integer-not-16") != std::string::npos);

    json j2 = run_record("tower '1/17' --odd-even --assume-schanuel");
    CHECK(j2["h_odd_verdict"] == "conditionally transcendental (Schanuel)");

    json env = run_record("curve '17'", "EXPSOLVE_ASSUME_SCHANUEL=1");
    CHECK(env["pair_verdict"] == "conditionally transcendental (Schanuel)");
}

TEST_CASE("classify --inverse-power mirrors the tower companion form") {
    json j = run_record("classify 'sqrt(2)' --inverse-power");
    CHECK(j["nature_verdict"] == "algebraic irrational");
    CHECK(j["nature_witness"] == "1/2*sqrt(2)");
    CHECK(run_cli("classify '5/7' --inverse-power").code == 2);
}

TEST_CASE("plotdata emits gnuplot tables") {
    RunResult r = run_cli("plotdata 5 --resolution 50");
    CHECK(r.code == 0);
    REQUIRE(r.out.size() > 0);
    CHECK(r.out[0] == '#');
    long rows = 0;
    for (char c : r.out)
        if (c == '\n') ++rows;
    CHECK(rows == 51);  // header + 50 samples

    RunResult r6 = run_cli("plotdata 6 --resolution 20");
    CHECK(r6.code == 0);

    json j = json::parse(run_cli("plotdata 4 --resolution 10 --format record").out);
    CHECK(j["figure"] == 4);
    CHECK(j["rows"] == 10);

    for (int fig = 1; fig <= 3; ++fig) {
        RunResult rr = run_cli("plotdata " + std::to_string(fig) + " --resolution 12");
        CHECK(rr.code == 0);
        CHECK(rr.out[0] == '#');
    }
    CHECK(run_cli("plotdata 7").code == 3);  // CLI11 range check
    CHECK(run_cli("plotdata 5 --min 3 --max 2").code == 2);
}
