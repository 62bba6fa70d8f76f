#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "sodlab/cli.hpp"
#include "sodlab/error.hpp"

using namespace sodlab;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool any_failure_starts_with(const Json& report, const std::string& prefix) {
    for (const auto& f : report["failures"])
        if (f.get<std::string>().rfind(prefix, 0) == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("decompose the S3 cubic with the ledger") {
    auto r = invoke({"decompose", "--n", "3", "--poly", "e1^3+e1*e2+e3", "--ledger", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    std::multiset<std::string> classes;
    for (const auto& p : j["pieces"]) classes.insert(p["class"].get<std::string>());
    CHECK(classes == std::multiset<std::string>{"empty", "3 points", "P(1,2)"});
    CHECK(j["total_rank"] == 6);
    CHECK(j["ledger"]["pass"] == true);
    CHECK(j["ledger"]["oracle_total"] == 6);
}

TEST_CASE("projective ledger for n = 4") {
    auto r = invoke({"projective", "--n", "4", "--ledger"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["total_rank"] == 20);
    CHECK(j["ledger"]["oracle_total"] == 20);
}

TEST_CASE("exit code 2 for failed hypotheses") {
    SUBCASE("triple hyperplane") {
        auto r = invoke({"decompose", "--n", "3", "--poly", "e1^3"});
        CHECK(r.code == 2);
        auto j = Json::parse(r.out);
        CHECK(j["smooth"] == false);
        CHECK(any_failure_starts_with(j, "smooth:"));
    }
    SUBCASE("not symmetric") {
        auto r = invoke({"decompose", "--n", "3", "--poly", "x1^3+x2^3"});
        CHECK(r.code == 2);
        auto j = Json::parse(r.out);
        CHECK(j["symmetric"] == false);
        CHECK(any_failure_starts_with(j, "symmetric:"));
    }
    SUBCASE("vanishes at the all-ones point") {
        auto r = invoke({"decompose", "--n", "3", "--poly", "e1^3+e1*e2-36*e3"});
        CHECK(r.code == 2);
        auto j = Json::parse(r.out);
        CHECK(j["value_at_ones"] == "0");
        CHECK(any_failure_starts_with(j, "value_at_ones:"));
    }
    SUBCASE("check subcommand") {
        CHECK(invoke({"check", "--n", "3", "--poly", "e1^3"}).code == 2);
        CHECK(invoke({"check", "--n", "3", "--poly", "e1^3+e1*e2+e3"}).code == 0);
    }
    SUBCASE("non-homogeneous") {
        auto r = invoke({"decompose", "--n", "2", "--poly", "e1^2+e1"});
        CHECK(r.code == 2);
        CHECK(any_failure_starts_with(Json::parse(r.out), "homogeneous:"));
    }
    SUBCASE("cyclic nonvanishing") {
        auto r = invoke({"cyclic", "--d", "2,1,1", "--projective", "--poly", "x1*x2"});
        CHECK(r.code == 2);
        CHECK(Json::parse(r.out).contains("hypothesis_failure"));
    }
    SUBCASE("validation") {
        CHECK(invoke({"projective", "--n", "0"}).code == 2);
        CHECK(invoke({"cyclic", "--d", "2,2", "--poly", "x1^2+x2^2"}).code == 2);
    }
}

TEST_CASE("exit code 3 for parse errors") {
    CHECK(invoke({"decompose", "--n", "3", "--poly", "e1^3+"}).code == 3);
    CHECK(invoke({"decompose", "--n", "3", "--poly", "y1^3"}).code == 3);
    CHECK(invoke({"decompose", "--n", "3", "--poly", "e1/0"}).code == 3);
    CHECK(invoke({"bogus"}).code == 3);
    CHECK(invoke({}).code == 3);
    CHECK(invoke({"projective"}).code == 3);
    CHECK(invoke({"projective", "--n", "three"}).code == 3);
    CHECK(invoke({"projective", "--n", "3", "--format", "yaml"}).code == 3);
    CHECK(invoke({"cyclic", "--d", "2,x"}).code == 3);
    CHECK(invoke({"curve", "--orbits", "3,,2"}).code == 3);
}

TEST_CASE("exit code 4 for unsupported sizes") {
    auto r = invoke({"projective", "--n", "7", "--ledger"});
    CHECK(r.code == 4);
    CHECK(r.err.find("n <= 6") != std::string::npos);
    CHECK(invoke({"projective", "--n", "7"}).code == 0);
}

TEST_CASE("e-form and x-form give identical reports") {
    const std::string eform = "e1^3+e1*e2+e3";
    auto expanded = parse_symmetric_input(eform, 3);
    const std::string xform = to_string(expanded);
    for (const char* format : {"json", "text"}) {
        auto a = invoke({"decompose", "--n", "3", "--poly", eform, "--ledger", "--format", format});
        auto b = invoke({"decompose", "--n", "3", "--poly", xform, "--ledger", "--format", format});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    CHECK(parse_symmetric_input("p1^2", 2) == parse_symmetric_input("e1^2", 2));
    CHECK(parse_symmetric_input("p2", 2) == parse_symmetric_input("e1^2-2*e2", 2));
}

TEST_CASE("output is byte-deterministic") {
    std::vector<std::vector<std::string>> runs{
        {"decompose", "--n", "4", "--poly", "e1^3+e1*e2+e3", "--ledger"},
        {"projective", "--n", "5", "--format", "text"},
        {"cyclic", "--d", "3,2", "--projective", "--ledger"},
        {"curve", "--orbits", "3,2,2"},
    };
    for (const auto& args : runs) {
        auto a = invoke(args);
        auto b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("json and text list the same pieces") {
    auto j = Json::parse(invoke({"decompose", "--n", "4", "--poly", "e1^3+e1*e2+e3"}).out);
    auto text = invoke({"decompose", "--n", "4", "--poly", "e1^3+e1*e2+e3", "--format", "text"}).out;
    for (const auto& p : j["pieces"]) {
        std::string partition = "(";
        for (std::size_t i = 0; i < p["partition"].size(); ++i)
            partition += (i ? "," : "") + std::to_string(p["partition"][i].get<int>());
        partition += ")";
        auto line_start = text.find("\n" + partition + " ");
        REQUIRE(line_start != std::string::npos);
        auto line = text.substr(line_start + 1, text.find('\n', line_start + 1) - line_start - 1);
        CHECK(line.find(p["class"].get<std::string>()) != std::string::npos);
    }
}

TEST_CASE("curve reports") {
    auto empty = Json::parse(invoke({"curve", "--orbits", ""}).out);
    REQUIRE(empty["pieces"].size() == 1);
    CHECK(empty["pieces"][0]["kind"] == "coarse");
    auto j = Json::parse(invoke({"curve", "--orbits", "3,2,2"}).out);
    CHECK(j["exceptional_count"] == 4);
    CHECK(invoke({"curve", "--orbits", "1"}).code == 2);
}

TEST_CASE("cyclic affine and projective") {
    auto affine = Json::parse(invoke({"cyclic", "--d", "4"}).out);
    REQUIRE(affine.size() == 4);
    CHECK(affine[0]["label"] == "D(pt) x chi^(3)");
    auto proj = Json::parse(invoke({"cyclic", "--d", "2,2", "--projective", "--ledger"}).out);
    std::vector<int> ranks;
    for (const auto& p : proj["pieces"]) ranks.push_back(p["rank"].get<int>());
    CHECK(ranks == std::vector<int>{0, 2, 2, 4});
    CHECK(proj["ledger"]["pass"] == true);
}
