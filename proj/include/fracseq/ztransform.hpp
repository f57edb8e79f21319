#pragma once

/**
 * @file ztransform.hpp
 * @brief Z-transform of finitely supported sequences sampled on circles S_rho.
 *
 * For a finite window the transform is the exact finite sum
 *
 *     F(z) = sum_k x_k z^{-k},   z_j = rho e^{2 pi i j / M},
 *
 * and because the samples are equally spaced in angle, inversion is a
 * discrete Fourier inversion that is exact as long as the window fits into
 * M samples. Uniform angular sampling is the trapezoidal rule for the
 * periodic integrand, so the circle integrals used for Parseval and the
 * Hardy test are evaluated the same way.
 */

#include <vector>

#include "fracseq/sequence.hpp"

namespace fracseq {

struct TransformSamples {
    double rho = 0.0;
    std::vector<double> theta;
    std::vector<cplx> z;
    Matrix values;  // d x M; column j holds F(z_j)

    std::size_t M() const noexcept { return z.size(); }
};

TransformSamples ztransform(const WeightedSequence& x, double rho, std::size_t M);

/// x_k = rho^k (1/M) sum_j F(z_j) e^{2 pi i j k / M} for k in [a, b].
/// Throws std::invalid_argument when b - a + 1 > M (aliasing).
WeightedSequence inverse_ztransform(const TransformSamples& samples, Index a, Index b);

/// | ||x||^2_{2,rho} - (1/M) sum_j ||F(z_j)||^2 | / ||x||^2_{2,rho}; 0 for the
/// zero sequence. Requires M >= 2 * window length.
double parseval_check(const WeightedSequence& x, double rho, std::size_t M);

/// max_j || Z(tau x)(z_j) - z_j Z(x)(z_j) ||.
double multiplication_equivalence_check(const WeightedSequence& x, double rho, std::size_t M);

struct SupportDiagnostic {
    bool positive = true;          // verdict of the growth heuristic
    bool literal_positive = true;  // no nonzero entry at a negative index
    std::vector<double> radii;
    std::vector<double> integrals;      // (1/M) sum_j ||F(mu e^{i theta_j})||^2 per radius
    std::vector<double> growth_ratios;  // integrals[i+1] / integrals[i]

    bool agrees() const noexcept { return positive == literal_positive; }
};

/// {rho, 2 rho, 4 rho, 8 rho}
std::vector<double> default_hardy_radii(double rho);

/// Heuristic test of spt x in N through the circle integrals at the given
/// increasing radii: reports not-positive when some consecutive ratio
/// exceeds (mu_{i+1}/mu_i)^2 - slack, the growth of a single z^{+1} term.
SupportDiagnostic positive_support_test(const WeightedSequence& x, double rho, const std::vector<double>& radii,
                                        std::size_t M, double slack = 0.1);

}  // namespace fracseq
