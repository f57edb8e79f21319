#pragma once

/**
 * @file binomial.hpp
 * @brief Generalized binomial coefficients and the coefficient sequences of
 *        (1 - z^{-1})^alpha.
 *
 * Every fractional operator in the library is a causal convolution with the
 * kernel c_k = (-1)^k C(alpha, k). The kernel is produced by the
 * multiplicative recurrence
 *
 *     c_0 = 1,   c_{k+1} = c_k (k - alpha) / (k + 1),
 *
 * which stays accurate for large k, where |c_k| = O(k^{-1-alpha}). No tail
 * estimate is attempted; callers choose the truncation length.
 */

#include <cstddef>
#include <vector>

namespace fracseq {

/// Real fractional order. Construction rejects NaN and infinities.
class FracOrder {
public:
    explicit FracOrder(double alpha);

    double value() const noexcept { return alpha_; }
    bool in_unit_interval() const noexcept { return alpha_ > 0.0 && alpha_ < 1.0; }

    /// Throws std::domain_error unless 0 < alpha < 1.
    void require_unit_interval(const char* context) const;

private:
    double alpha_;
};

/// C(alpha, n) = alpha (alpha - 1) ... (alpha - n + 1) / n!
double binom(double alpha, std::size_t n);

/// (x)^(n) = x (x - 1) ... (x - n + 1), the integer-order falling factorial.
double falling_factorial(double x, std::size_t n);

/// Gamma(x + 1) / Gamma(x - order + 1) for a real order, through log-gamma.
/// Throws std::domain_error when Gamma(x + 1) sits on a pole that the
/// denominator does not cancel.
double falling_factorial(double x, double order);

struct ConvolutionKernel {
    double alpha = 0.0;
    std::vector<double> coeffs;  // coeffs[k] = (-1)^k C(alpha, k)

    /// Truncation length; the kernel holds N() + 1 coefficients.
    std::size_t N() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    double operator[](std::size_t k) const noexcept { return k < coeffs.size() ? coeffs[k] : 0.0; }
};

ConvolutionKernel make_kernel(double alpha, std::size_t N);

/// sum_{k=0}^n (-1)^k C(alpha, k); equals (-1)^n C(alpha - 1, n).
double partial_sum(double alpha, std::size_t n);

}  // namespace fracseq
