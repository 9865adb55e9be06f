#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "sforge/cli/app.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = sforge::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        v.push_back(line);
    return v;
}

}  // namespace

TEST_CASE("table command") {
    auto r = invoke({"table", "s2", "--max-m", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "0,1,7,6,1");

    r = invoke({"table", "s1u", "--max-m", "5"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "0 24 50 35 10 1");

    r = invoke({"table", "s2", "--max-m", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = invoke({"table", "s1", "--max-m", "3", "--format", "csv"});
    CHECK(lines(r.out).back() == "0,2,-3,1");
}

TEST_CASE("table errata notes") {
    auto r = invoke({"table", "s2", "--max-m", "9", "--layout", "stirling"});
    CHECK(r.code == 0);
    CHECK(r.out.find("note:") != std::string::npos);
    r = invoke({"table", "s2", "--max-m", "8"});
    CHECK(r.out.find("note:") == std::string::npos);
    r = invoke({"--format", "json", "table", "s1u", "--max-m", "9"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["notes"].size() == 1);
    CHECK(j["result"]["rows"][9][3] == "118124");
}

TEST_CASE("poly command") {
    CHECK(invoke({"poly", "omega", "4"}).out == "x + 14x^2 + 36x^3 + 24x^4\n");
    CHECK(invoke({"poly", "phi", "0"}).out == "1\n");
    CHECK(invoke({"poly", "euler", "1"}).out == "-1/2 + x\n");
    CHECK(invoke({"poly", "nope", "1"}).code == 2);
}

TEST_CASE("powersum command") {
    auto r = invoke({"powersum", "2", "3", "--method", "all"});
    CHECK(r.code == 0);
    CHECK(r.out == "naive: 14\nbernoulli: 14\nstirling: 14\nagree: yes\n");
    CHECK(invoke({"powersum", "1", "100", "--method", "stirling"}).out == "5050\n");
    CHECK(invoke({"powersum", "0", "5", "--method", "bernoulli"}).out == "5\n");
    CHECK(invoke({"powersum", "2", "0"}).code == 2);
}

TEST_CASE("verify command") {
    auto r = invoke({"verify", "eq10.2", "--max", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("checked 441, failures 0") != std::string::npos);
    CHECK(invoke({"verify", "eq8.3", "--order", "24"}).code == 0);
    CHECK(invoke({"verify", "eq99"}).code == 2);
    r = invoke({"--format", "json", "verify", "eq1.1", "--max", "6"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "verify");
    CHECK(r.code == 0);
}

TEST_CASE("expand command") {
    auto r = invoke({"expand", "bernoulli-egf", "--order", "4"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(1) == "1 -1/2 -1/2");
    CHECK(invoke({"expand", "fermi", "--lambda", "1", "--mu", "-1"}).code == 2);
    CHECK(invoke({"expand", "inverse-factorial", "--m", "0"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"table", "s2", "--max-m", "201"}).code == 2);
    CHECK(invoke({"table", "s2", "--max-m", "-1"}).code == 2);
    CHECK(invoke({"--format", "xml", "table", "s2"}).code == 2);
    CHECK(invoke({"table", "s2", "--bogus"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("JSON output round-trips byte for byte") {
    const std::vector<std::vector<std::string>> cases = {
        {"--format", "json", "table", "s2", "--max-m", "9", "--layout", "stirling"},
        {"--format", "json", "table", "s1", "--max-m", "6"},
        {"--format", "json", "poly", "eulerian", "5"},
        {"--format", "json", "powersum", "3", "10"},
        {"--format", "json", "verify", "all", "--max", "6", "--order", "8"},
        {"--format", "json", "expand", "inverse-factorial", "--m", "2", "--K", "3"},
        {"--format", "json", "expand", "fermi", "--lambda", "2/3", "--mu", "5"},
    };
    for (const auto& args : cases) {
        const auto r = invoke(args);
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.dump(2) + "\n" == r.out);
        for (const char* key : {"command", "params", "result", "notes"})
            CHECK(j.contains(key));
    }
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args = {"--seed", "7", "verify", "all", "--max", "6",
                                           "--order", "8"};
    CHECK(invoke(args).out == invoke(args).out);
}
