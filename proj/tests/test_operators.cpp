#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fracseq/operators.hpp"
#include "support/oracles.hpp"

using namespace fracseq;

namespace {

Vector one()
{
    return Vector::Ones(1);
}

WeightedSequence impulse(std::size_t len, double rho = 2.0)
{
    Matrix m = Matrix::Zero(1, static_cast<Eigen::Index>(len));
    m(0, 0) = 1.0;
    return WeightedSequence(0, m, rho);
}

WeightedSequence random_nat(std::mt19937_64& rng, Eigen::Index d, Eigen::Index len)
{
    return WeightedSequence(0, oracle::random_matrix(rng, d, len), 2.0);
}

// chi_N tau (1 - tau^{-1})^alpha u, on indices 0 .. len - 2, from the long
// double direct sum.
Matrix shifted_power_oracle(long double alpha, const Matrix& v)
{
    const Matrix full = oracle::direct_convolution(alpha, v, v.cols());
    return full.rightCols(v.cols() - 1);
}

}  // namespace

TEST_CASE("frac_power examples")
{
    std::mt19937_64 rng(10);
    const WeightedSequence u(-3, oracle::random_matrix(rng, 2, 20), 2.0);
    CHECK(max_abs_diff(restrict_window(frac_power(0.0, u), u.start(), u.end()), u) == 0.0);

    const auto step = chi_geq(0, one(), 2.0, 30);
    const auto d = frac_power(1.0, step);
    CHECK(max_abs_diff(restrict_window(d, 0, 31), delta(0, one(), 2.0)) == 0.0);

    const auto back = frac_power(0.5, frac_power(-0.5, u));
    CHECK(max_abs_diff(restrict_window(back, u.start(), u.end()), u) < 1e-10 * u.values().cwiseAbs().maxCoeff());
}

TEST_CASE("frac_power semigroup on exact regions")
{
    std::mt19937_64 rng(11);
    const double grid[] = {-0.75, -0.25, 0.25, 0.75};
    const WeightedSequence u(0, oracle::random_matrix(rng, 1, 128), 2.0);
    for (double a : grid)
        for (double b : grid) {
            const auto lhs = restrict_window(frac_power(a, frac_power(b, u)), 0, 128);
            const auto rhs = restrict_window(frac_power(a + b, u), 0, 128);
            CHECK_MESSAGE(max_abs_diff(lhs, rhs) < 1e-10, "a = " << a << ", b = " << b);
        }
}

TEST_CASE("frac_sum")
{
    const auto ones = frac_sum(1.0, impulse(8));
    for (Index n = 0; n < 8; ++n)
        CHECK(ones[n](0) == cplx(1.0));

    const auto ramp = frac_sum(1.0, chi_geq(0, one(), 2.0, 9));
    for (Index n = 0; n < 10; ++n)
        CHECK(ramp[n](0).real() == doctest::Approx(static_cast<double>(n + 1)));

    const auto half = frac_sum(0.5, impulse(6));
    const double want[] = {1.0, 0.5, 0.375, 0.3125};
    for (Index n = 0; n < 4; ++n)
        CHECK(half[n](0).real() == doctest::Approx(want[n]).epsilon(1e-15));

    std::mt19937_64 rng(12);
    const auto v = random_nat(rng, 2, 50);
    const auto via_power = restrict_window(frac_power(-0.3, v), 0, 50);
    CHECK(max_abs_diff(frac_sum(0.3, v), via_power) == 0.0);

    CHECK_THROWS_AS(frac_sum(0.0, v), std::domain_error);
    CHECK_THROWS_AS(frac_sum(-0.5, v), std::domain_error);
    CHECK_THROWS_AS(frac_sum(0.5, shift(v, 1)), std::invalid_argument);
}

TEST_CASE("forward_difference")
{
    const auto d = forward_difference(impulse(4));
    CHECK(d[0](0) == cplx(-1.0));
    CHECK(d[1].isZero());

    const auto step = forward_difference(chi_geq(0, one(), 2.0, 9));
    for (Index n = 0; n < 9; ++n)
        CHECK(step[n].isZero());
    CHECK(step[9](0) == cplx(-1.0));  // window edge

    Matrix r(1, 12);
    for (Eigen::Index n = 0; n < 12; ++n)
        r(0, n) = static_cast<double>(n);
    const auto ramp = forward_difference(WeightedSequence(0, r, 2.0));
    for (Index n = 0; n < 11; ++n)
        CHECK(ramp[n](0) == cplx(1.0));

    // chi_N removes everything left of 0.
    const auto neg = forward_difference(delta(-1, one(), 2.0));
    CHECK(neg.start() == 0);
    CHECK(neg[0](0) == cplx(-0.0));
    CHECK(neg[-1].isZero());
}

TEST_CASE("rl_delta")
{
    std::mt19937_64 rng(13);
    CHECK(rl_delta(0.5, WeightedSequence::zeros(0, 10, 1, 2.0)).values().isZero());

    const auto imp = rl_delta(0.5, impulse(12));
    const auto c = make_kernel(0.5, 12);
    REQUIRE(imp.size() == 11);
    for (Index n = 0; n < 11; ++n)
        CHECK(imp[n](0).real() == doctest::Approx(c.coeffs[static_cast<std::size_t>(n + 1)]).epsilon(1e-13));
    CHECK(imp[0](0).real() == doctest::Approx(-0.5));
    CHECK(imp[1](0).real() == doctest::Approx(-0.125));
    CHECK(imp[2](0).real() == doctest::Approx(-0.0625));

    for (int trial = 0; trial < 100; ++trial) {
        const double alpha = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
        const auto v = random_nat(rng, 2, 40);
        const auto got = rl_delta(alpha, v);
        const Matrix want = shifted_power_oracle(alpha, v.values());
        CHECK((got.values() - want).cwiseAbs().maxCoeff() < 1e-12);
    }

    CHECK_THROWS_AS(rl_delta(1.0, impulse(4)), std::domain_error);
    CHECK_THROWS_AS(rl_delta(0.0, impulse(4)), std::domain_error);
}

TEST_CASE("caputo_delta")
{
    const auto constant = caputo_delta(0.4, chi_geq(0, one(), 2.0, 20));
    CHECK(constant.values().cwiseAbs().maxCoeff() == 0.0);

    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const double alpha = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
        const auto v = random_nat(rng, 1, 60);
        const auto rl = rl_delta(alpha, v);
        const auto cap = caputo_delta(alpha, v);
        REQUIRE(rl.size() == cap.size());
        double worst = 0.0;
        for (Index n = 0; n < static_cast<Index>(rl.size()); ++n) {
            const cplx correction =
                static_cast<double>(oracle::binom_ld(-alpha + n + 1, static_cast<std::size_t>(n + 1))) * v[0](0);
            worst = std::max(worst, std::abs(rl[n](0) - cap[n](0) - correction));
        }
        CHECK(worst < 1e-12);
    }

    // tau (1 - tau^{-1})^alpha (u - chi_N u_0), restricted to N.
    const auto v = random_nat(rng, 2, 30);
    Matrix regular = v.values();
    for (Eigen::Index n = 0; n < regular.cols(); ++n)
        regular.col(n) -= v.values().col(0);
    const Matrix want = shifted_power_oracle(0.6L, regular);
    CHECK((caputo_delta(0.6, v).values() - want).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(caputo_delta(1.2, v), std::domain_error);
}

TEST_CASE("difference identities on windows")
{
    // Delta (1 - tau^{-1})^{-(1-alpha)} u = chi_N tau (1 - tau^{-1})^alpha u
    //                                     = tau (1 - tau^{-1})^alpha u - delta_{-1} u_0
    std::mt19937_64 rng(15);
    const double alpha = 0.35;
    const auto u = random_nat(rng, 2, 64);
    const auto lhs = restrict_window(forward_difference(frac_power(-(1.0 - alpha), u)), 0, 63);
    const auto tau_power = shift(frac_power(alpha, u), 1);
    const auto mid = restrict_window(tau_power, 0, 63);
    CHECK(max_abs_diff(lhs, mid) < 1e-12);

    const auto rhs = restrict_window(tau_power - delta(-1, u[0], 2.0), -1, 63);
    CHECK(max_abs_diff(restrict_window(lhs, -1, 63), rhs) < 1e-12);
}

TEST_CASE("gl_delta")
{
    std::mt19937_64 rng(16);
    const auto v = random_nat(rng, 1, 40);
    CHECK(max_abs_diff(gl_delta(0.5, 1.0, v), restrict_window(frac_power(0.5, v), 0, 40)) < 1e-15);

    const auto scaled = gl_delta(0.5, 2.0, impulse(10));
    const auto c = make_kernel(0.5, 9);
    for (Index n = 0; n < 10; ++n)
        CHECK(scaled[n](0).real() ==
              doctest::Approx(std::pow(2.0, -0.5) * c.coeffs[static_cast<std::size_t>(n)]).epsilon(1e-14));

    CHECK(gl_delta(0.3, 0.1, WeightedSequence::zeros(0, 5, 1, 2.0)).values().isZero());
    CHECK_THROWS_AS(gl_delta(0.5, 0.0, v), std::domain_error);
    CHECK_THROWS_AS(gl_delta(0.5, -1.0, v), std::domain_error);
}

TEST_CASE("causality of the operators")
{
    std::mt19937_64 rng(17);
    for (Index a : {0, 3, 11}) {
        Matrix m = Matrix::Zero(1, 30);
        m.rightCols(30 - a) = oracle::random_matrix(rng, 1, 30 - a);
        const WeightedSequence v(0, m, 2.0);
        CHECK(*support_begin(frac_sum(0.4, v)) >= a);
        CHECK(*support_begin(gl_delta(0.4, 0.5, v)) >= a);
        CHECK(*support_begin(frac_power(0.4, shift(v, 7))) >= a - 7);
        CHECK(rl_delta(0.4, v).start() >= 0);
        CHECK(caputo_delta(0.4, v).start() >= 0);
        CHECK(forward_difference(v).start() >= 0);
    }
}
