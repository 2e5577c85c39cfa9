#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qspinor/cli.hpp"
#include "qspinor/duality.hpp"
#include "qspinor/expr.hpp"
#include "qspinor/json_io.hpp"

#include <json.hpp>

#include <sstream>

using namespace qspinor;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("act") {
    auto r = run({"act", "F", "x2^3"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");

    r = run({"act", "Ed", "x2"});
    CHECK(r.code == 0);
    CHECK(parse_spinor(r.out) == apply(sigma_diagonal().E, SpinorVector::monomial(0, 1, 0)));

    r = run({"act", "F", "x2^3", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).empty());
}

TEST_CASE("monogenic") {
    auto r = run({"monogenic", "1", "-"});
    CHECK(r.code == 0);
    CHECK(r.out == "x1 y + (1/(q^4 + q^2 + 1)) x2 y^3\n");

    r = run({"monogenic", "4", "+"});
    CHECK(r.code == 0);
    CHECK(r.out == "x2^4\n");

    r = run({"monogenic", "2", "minus"});
    CHECK(r.code == 0);
    CHECK(parse_spinor(r.out) == p_minus(2));
}

TEST_CASE("project and decompose") {
    auto r = run({"project", "1", "x1 y"});
    CHECK(r.code == 0);
    CHECK(parse_spinor(r.out) == project(1, SpinorVector::monomial(1, 0, 1)));

    r = run({"decompose", "x1 y"});
    CHECK(r.code == 0);
    CHECK(r.out.find("degree: 1") != std::string::npos);
    CHECK(r.out.find("m[1] = ") != std::string::npos);
    CHECK(r.out.find("m[0] = ") != std::string::npos);
    CHECK(r.out.find("reconstruction = x1 y\n") != std::string::npos);

    r = run({"decompose", "x1 + y"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("eval") {
    auto r = run({"eval", "qint(3)", "--q", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "21/4\n");

    r = run({"eval", "qbinom(4,2)", "--q", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");

    r = run({"eval", "1/qint(2)", "--q", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/2\n");

    // pole reporting
    r = run({"eval", "1/(q - q^-1)", "--q", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("pole") != std::string::npos);
}

TEST_CASE("verify") {
    auto r = run({"verify", "weyl", "--m-max", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("seed: 20251") != std::string::npos);
    CHECK(r.out.find("checks passed") != std::string::npos);

    r = run({"verify", "qcalculus", "--json", "--seed", "7"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("all_pass").get<bool>());
    CHECK(j.at("seed").get<std::uint64_t>() == 7);
    CHECK(j.at("checks").is_array());
}

TEST_CASE("table") {
    auto r = run({"table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ad_Fd(mu1) = mu2*g1^2\n") != std::string::npos);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 12);
}

TEST_CASE("json round trips") {
    const RatQ samples[] = {
        quantum_int(7), quantum_int(5).inv(), RatQ(), RatQ::laurent_term(Int(-6), 3),
        RatQ(Int(1) << 200),  // beyond int64, serialized as a string
    };
    for (const auto& a : samples) CHECK(ratq_from_json(ratq_to_json(a)) == a);

    const SpinorVector v = p_minus(3);
    CHECK(spinor_from_json(spinor_to_json(v)) == v);
    CHECK(spinor_from_json(spinor_to_json(SpinorVector())).is_zero());
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run({"act", "mu1^-1", "x1"}).code == 2);
    CHECK(run({"act", "q +", "x1"}).code == 2);
    CHECK(run({"verify", "bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"project", "2", "x1"}).code == 2);  // degree mismatch
    CHECK(run({"--help"}).code == 0);
}
