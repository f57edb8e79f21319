#include <doctest.h>

#include <locale>
#include <random>
#include <sstream>

#include "fracseq/io.hpp"
#include "support/oracles.hpp"

using namespace fracseq;

TEST_CASE("format_double uses 17 significant digits and a dot")
{
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
}

TEST_CASE("sequence CSV round-trips exactly")
{
    std::mt19937_64 rng(11);
    const WeightedSequence x(-3, oracle::random_matrix(rng, 2, 9), 1.75);
    std::stringstream ss;
    write_sequence_csv(ss, x);

    const std::string text = ss.str();
    CHECK(text.rfind("# rho=1.75,dim=2\nindex,re_0,im_0,re_1,im_1\n-3,", 0) == 0);

    const auto y = read_sequence_csv(ss);
    CHECK(y.start() == -3);
    CHECK(y.size() == 9);
    CHECK(y.rho() == 1.75);
    CHECK(max_abs_diff(x, y) == 0.0);
}

TEST_CASE("sequence CSV rejects malformed input")
{
    std::istringstream no_header("index,re_0,im_0\n0,1,0\n");
    CHECK_THROWS_AS(read_sequence_csv(no_header), FormatError);

    std::istringstream bad_cols("# rho=2,dim=1\nindex,re_0,im_0\n0,1\n");
    CHECK_THROWS_AS(read_sequence_csv(bad_cols), FormatError);

    std::istringstream bad_num("# rho=2,dim=1\nindex,re_0,im_0\n0,1,abc\n");
    CHECK_THROWS_AS(read_sequence_csv(bad_num), FormatError);
}

TEST_CASE("sequence CSV fills gaps with zeros")
{
    std::istringstream in("# rho=2,dim=1\nindex,re_0,im_0\n-1,1,0\n2,0,3\n");
    const auto x = read_sequence_csv(in);
    CHECK(x.start() == -1);
    CHECK(x.size() == 4);
    CHECK(x.at(0, 0) == cplx{});
    CHECK(x.at(2, 0) == cplx(0, 3));
}

TEST_CASE("ivp spec JSON")
{
    const auto j = nlohmann::json::parse(R"({"kind": "caputo", "alpha": 0.5, "x0": [[1, 0], [0, 2]],
        "A": [[[-1, 0], [0, 0]], [[0, 0], [-0.5, 0]]], "steps": 10, "h": 1})");
    const auto spec = parse_ivp_spec(j);
    CHECK(spec.kind == IvpKind::Caputo);
    CHECK(spec.alpha == 0.5);
    CHECK(spec.x0(1) == cplx(0, 2));
    REQUIRE(spec.rhs.matrix() != nullptr);
    CHECK((*spec.rhs.matrix())(1, 1) == cplx(-0.5, 0));
    CHECK(spec.steps == 10);

    const auto back = parse_ivp_spec(ivp_spec_to_json(spec));
    CHECK(back.kind == spec.kind);
    CHECK(*back.rhs.matrix() == *spec.rhs.matrix());

    const auto null_a = parse_ivp_spec(nlohmann::json::parse(R"({"kind": "rl", "alpha": 0.3, "x0": [[1, 0]],
        "A": null, "steps": 3, "h": 1})"));
    REQUIRE(null_a.rhs.matrix() != nullptr);
    CHECK(null_a.rhs.matrix()->isZero());

    CHECK_THROWS_AS(parse_ivp_spec(nlohmann::json::parse(R"({"kind": "xx", "alpha": 0.3, "x0": [[1,0]], "steps": 3})")),
                    FormatError);
    CHECK_THROWS_AS(parse_ivp_spec(nlohmann::json::parse(R"({"kind": "rl", "alpha": 0.3, "x0": [[1,0]]})")),
                    FormatError);
    CHECK_THROWS_AS(parse_ivp_spec(nlohmann::json::parse(R"({"kind": "rl", "alpha": 0.3, "x0": [[1,0]],
        "A": [[[1,0],[0,0]]], "steps": 3})")),
                    FormatError);
}

TEST_CASE("curve and transform CSV headers")
{
    std::stringstream ss;
    write_curve_csv(ss, symbol_curve(1.5, 0.5, 8));
    std::string first;
    std::getline(ss, first);
    CHECK(first == "theta,re_z,im_z,re_f,im_f");

    std::mt19937_64 rng(5);
    const WeightedSequence x(0, oracle::random_matrix(rng, 1, 6), 2.0);
    const auto s = ztransform(x, 2.0, 16);
    std::stringstream ts;
    write_transform_csv(ts, s);
    const auto back = read_transform_csv(ts, 2.0);
    CHECK(back.M() == 16);
    CHECK((back.values - s.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("verdict JSON")
{
    const auto j = verdict_to_json(matignon_check({-2.0, 0.0}, 0.5));
    CHECK(j["classification"] == "NecessaryFail");
    CHECK(j["witness"]["radius"].get<double>() > 1.0);
    CHECK(verdict_to_json(matignon_check({-1.0, 0.0}, 0.5))["witness"].is_null());
}
