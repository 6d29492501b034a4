#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef ICOSA_BIN
#error "ICOSA_BIN must point at the command-line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ICOSA_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

nlohmann::json as_json(const std::string& text) {
    return nlohmann::json::parse(text);
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("rtable --format yaml").exit_code == 2);
    CHECK(run("rtable --bogus").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("simulate --help").exit_code == 0);
}

TEST_CASE("rtable") {
    RunResult text = run("rtable");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("14") != std::string::npos);
    CHECK(count_lines(text.output) == 11);  // header + rule + 9 rows

    RunResult csv = run("rtable --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("i,j,r\n", 0) == 0);
    CHECK(count_lines(csv.output) == 46);  // header + 45 entries

    RunResult js = run("rtable --format json");
    CHECK(js.exit_code == 0);
    auto parsed = as_json(js.output);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 45);
    CHECK(parsed[0] == nlohmann::json({{"i", 0}, {"j", 0}, {"r", 1}}));
    bool found = false;
    for (const auto& e : parsed)
        if (e["i"] == 0 && e["j"] == 8) {
            CHECK(e["r"] == 14);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("r evaluates expressions") {
    RunResult h = run("r \"(x*y+1)*x^2*(x^2-1)*(x^2-4)\"");
    CHECK(h.exit_code == 0);
    CHECK(h.output == "0\n");

    CHECK(run("r \"(x*y)^2\"").output == "1\n");
    CHECK(run("r \"x^8\"").output == "14\n");
    CHECK(run("r \"(x-y)^2\"").output == "2\n");

    RunResult js = run("r --format json \"(x-y)^2*((x-y)^2-5)\"");
    CHECK(js.exit_code == 0);
    auto parsed = as_json(js.output);
    CHECK(parsed["expr"] == "(x-y)^2*((x-y)^2-5)");
    CHECK(parsed["text"] == "0");
    CHECK(parsed["value"]["a"] == "0");

    SUBCASE("degree failures exit 1, syntax failures exit 2") {
        RunResult deep = run("r \"x^5*y^4\"");
        CHECK(deep.exit_code == 1);
        CHECK(deep.output.find("degree") != std::string::npos);
        CHECK(run("r \"x^^2\"").exit_code == 2);
        CHECK(run("r \"\"").exit_code == 2);
    }
}

TEST_CASE("identities") {
    RunResult all = run("identities");
    CHECK(all.exit_code == 0);
    CHECK(count_lines(all.output) == 12);
    CHECK(all.output.find("FAIL") == std::string::npos);
    CHECK(all.output.find("I12 PASS") != std::string::npos);

    RunResult one = run("identities --only I3");
    CHECK(one.exit_code == 0);
    CHECK(count_lines(one.output) == 1);

    RunResult js = run("identities --format json");
    CHECK(js.exit_code == 0);
    auto parsed = as_json(js.output);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 12);
    for (const auto& e : parsed) {
        CHECK(e["pass"] == true);
        CHECK(e.contains("location"));
    }
    auto single = as_json(run("identities --only I8 --format json").output);
    CHECK(single["id"] == "I8");
    CHECK(single["pass"] == true);

    CHECK(run("identities --only I99").exit_code == 2);
}

TEST_CASE("chartable") {
    RunResult text = run("chartable");
    CHECK(text.exit_code == 0);
    CHECK(count_lines(text.output) == 11);  // header + sizes + 9 rows
    CHECK(text.output.find("chi_8") != std::string::npos);
    CHECK(text.output.find("phibar") != std::string::npos);
    CHECK(text.output.find("[1 0;0 1]") != std::string::npos);

    RunResult csv = run("chartable --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(count_lines(csv.output) == 11);
    CHECK(csv.output.find("size,1,1,20,20,30,12,12,12,12") != std::string::npos);

    auto parsed = as_json(run("chartable --format json").output);
    REQUIRE(parsed["classes"].size() == 9);
    CHECK(parsed["classes"][0]["size"] == 1);
    REQUIRE(parsed["characters"].size() == 9);
    CHECK(parsed["characters"][1]["values"][5] == "phi");
    CHECK(parsed["characters"][8]["values"][0] == "6");
}

TEST_CASE("mult") {
    auto one = as_json(run("mult --k 5").output);
    CHECK(one["k"] == 5);
    CHECK(one["degree"] == 6);
    CHECK(one["m"] == nlohmann::json::array({0, 0, 0, 0, 0, 0, 0, 0, 1}));

    auto many = as_json(run("mult --upto 3").output);
    REQUIRE(many.is_array());
    REQUIRE(many.size() == 4);
    CHECK(many[2]["m"] == nlohmann::json::array({0, 0, 0, 1, 0, 0, 0, 0, 0}));

    CHECK(run("mult").exit_code == 2);
    CHECK(run("mult --k 1 --upto 2").exit_code == 2);
}

TEST_CASE("pik") {
    RunResult res = run("pik --k 5");
    CHECK(res.exit_code == 0);
    auto parsed = as_json(res.output);
    CHECK(parsed["k"] == 5);
    CHECK(parsed["degree"] == 6);
    CHECK(parsed["mult"] == nlohmann::json::array({0, 0, 0, 0, 0, 0, 0, 0, 1}));
    REQUIRE(parsed["atoms"].size() == 9);
    CHECK(parsed["atoms"][8] == "pi x sym2 pi'");
    CHECK(parsed["atoms"][0] == "1");
    CHECK(run("pik").exit_code == 2);
}

TEST_CASE("densities") {
    RunResult text = run("densities");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("1/120") != std::string::npos);
    CHECK(text.output.find("phibar") != std::string::npos);

    auto parsed = as_json(run("densities --format json").output);
    CHECK(parsed.size() == 9);
    CHECK(parsed["0"] == "1/4");
    CHECK(parsed["1"] == "1/6");
    CHECK(parsed["2"] == "1/120");
    CHECK(parsed["-phibar"] == "1/10");
}

TEST_CASE("simulate") {
    RunResult js = run("simulate --x 2000 --seed 7 --format json");
    CHECK(js.exit_code == 0);
    auto parsed = as_json(js.output);
    CHECK(parsed["x"] == 2000);
    CHECK(parsed["seed"] == 7);
    CHECK(parsed["pi_x"] == 303);
    CHECK(parsed["densities"].size() == 9);
    REQUIRE(parsed["partial_sums"].size() == 5);
    CHECK(parsed["partial_sums"][0]["f"] == "1");
    CHECK(parsed["partial_sums"][1]["ratio"] == 0.0);

    SUBCASE("deterministic, including across thread counts") {
        RunResult again = run("simulate --x 2000 --seed 7 --format json");
        CHECK(again.output == js.output);
        RunResult threaded = run("simulate --x 2000 --seed 7 --threads 3 --format json");
        CHECK(threaded.output == js.output);
    }
    SUBCASE("custom targets") {
        auto custom = as_json(run("simulate --x 2000 --seed 7 --f \"x*y\" --format json").output);
        REQUIRE(custom["partial_sums"].size() == 1);
        CHECK(custom["partial_sums"][0]["f"] == "x*y");
        CHECK(custom["partial_sums"][0]["target"] == 0.0);
    }
    SUBCASE("text report") {
        RunResult text = run("simulate --x 2000 --seed 7");
        CHECK(text.exit_code == 0);
        CHECK(text.output.find("pi(x)   303") != std::string::npos);
        CHECK(text.output.find("alpha") != std::string::npos);
    }
    SUBCASE("bad target expression") {
        CHECK(run("simulate --x 2000 --f \"x^\"").exit_code == 2);
        CHECK(run("simulate --x 2000 --f \"x^3*y^6\"").exit_code == 1);
    }
}

TEST_CASE("verify-all") {
    RunResult res = run("verify-all --x 20000 --seed 42");
    CHECK(res.exit_code == 0);
    auto parsed = as_json(res.output);
    CHECK(parsed["all_pass"] == true);
    CHECK(parsed.size() == 8);  // seven sections + all_pass
    for (const char* name :
         {"golden", "bipoly", "rescalc", "identities", "icosagroup", "isobaric", "frobsim"})
        CHECK(parsed[name] == true);
}
