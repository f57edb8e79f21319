#pragma once

/**
 * @file stability.hpp
 * @brief The symbol f(z) = z (1 - z^{-1})^alpha and spectral stability tests.
 *
 * Under the Z-transform, tau (1 - tau^{-1})^alpha becomes multiplication by
 * f on the circle S_rho. The operator tau (1 - tau^{-1})^alpha - A is
 * invertible on l_{2,rho} exactly when f(S_rho) misses the spectrum of A,
 * and it has a causal inverse once rho is past the point where
 * mu (1 - mu^{-1})^alpha exceeds the spectral radius.
 *
 * (1 - z^{-1})^alpha is evaluated on the principal branch. For |z| > 1 the
 * point 1 - z^{-1} lies in the open disc of radius 1 about 1, so it never
 * meets the branch cut and agrees with the binomial series.
 */

#include <optional>
#include <string>
#include <vector>

#include "fracseq/sequence.hpp"

namespace fracseq {

/// (1 - z^{-1})^alpha, principal branch. Requires |z| > 1.
cplx binomial_power(cplx z, double alpha);

/// z (1 - z^{-1})^alpha. Throws std::domain_error for |z| <= 1.
cplx symbol(cplx z, double alpha);

/// d/dz of symbol(z, alpha).
cplx symbol_derivative(cplx z, double alpha);

/// The real-axis gap endpoint -2^alpha.
double boundary_constant(double alpha);

struct CurveSample {
    double theta;
    cplx z;
    cplx f;
};

struct SymbolCurve {
    double rho = 0.0;
    double alpha = 0.0;
    std::vector<CurveSample> samples;  // theta_j = 2 pi j / M

    std::size_t M() const noexcept { return samples.size(); }
};

SymbolCurve symbol_curve(double rho, double alpha, std::size_t M);

/// Hausdorff distance between the closed polylines through two sampled curves.
double curve_distance(const SymbolCurve& a, const SymbolCurve& b);

/// min_j |(1 - z_j^{-1})^alpha| - (1 - rho^{-1})^alpha over M points of S_rho.
double binom_estimate_margin(double rho, double alpha, std::size_t M);

class OperatorMatrix {
public:
    explicit OperatorMatrix(Matrix entries);

    const Matrix& entries() const noexcept { return entries_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }

private:
    Matrix entries_;
};

/// Eigenvalues with multiplicity.
std::vector<cplx> spectrum(const OperatorMatrix& A);
double spectral_radius(const OperatorMatrix& A);

/// Smallest mu > 1 (to ~1e-12) with mu (1 - mu^{-1})^alpha >= r; 1 when r == 0.
double causal_radius(double spectral_radius, double alpha);
double causal_radius(const OperatorMatrix& A, double alpha);

struct InvertibilityResult {
    bool invertible = true;
    double min_distance = 0.0;
    cplx nearest_lambda;
    cplx nearest_z;
};

/// Distance between f(S_rho) and the spectrum of A, from M samples plus a
/// local refinement around the closest one. Non-invertible when the
/// distance falls below tol (default 1e-9 (1 + |lambda|) per eigenvalue).
InvertibilityResult invertibility_check(const OperatorMatrix& A, double rho, double alpha,
                                        std::size_t M = 4096, std::optional<double> tol = std::nullopt);

enum class Classification { SufficientStable, NecessaryFail, Boundary, Indeterminate };

std::string to_string(Classification c);

struct StabilityVerdict {
    Classification classification = Classification::Indeterminate;
    cplx lambda;
    std::optional<cplx> witness_z;  // f(witness_z) = lambda with |witness_z| > 1
    std::optional<double> witness_radius;
};

/// Solves f(z) = lambda for |z| > 1 by damped Newton from a fan of starting
/// points. Returns nothing when no start converges.
std::optional<cplx> solve_symbol(cplx lambda, double alpha);

/// Scalar Matignon-type classification. Real lambda is decided in closed form
/// ((-2^alpha, 0) stable, endpoints boundary, otherwise in the range of f).
/// Non-real lambda is NecessaryFail when f(z) = lambda has a root with
/// |z| > 1, Indeterminate otherwise. tol decides "real" and "on an endpoint".
StabilityVerdict matignon_check(cplx lambda, double alpha, double tol = 1e-12);

}  // namespace fracseq
