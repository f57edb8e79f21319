#pragma once

/**
 * @file sequence.hpp
 * @brief Finitely supported vector-valued sequences on Z with an exponential
 *        weight rho.
 *
 * A WeightedSequence stores a dense window x_start, ..., x_{start+len-1} of
 * complex d-vectors; every index outside the window reads as zero. The weight
 * rho selects the space l_{p,rho}(Z; C^d) with norm
 *
 *     ||x||_{p,rho} = ( sum_k ||x_k||^p rho^{-pk} )^{1/p},
 *     ||x||_{inf,rho} = sup_k ||x_k|| rho^{-k}.
 *
 * Arithmetic between sequences requires equal rho and equal dimension.
 */

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "fracseq/binomial.hpp"

namespace fracseq {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = std::int64_t;

class WeightedSequence {
public:
    /// values is d x len; column j holds x_{start + j}.
    WeightedSequence(Index start, Matrix values, double rho);

    static WeightedSequence zeros(Index start, std::size_t len, std::size_t dim, double rho);

    Index start() const noexcept { return start_; }
    /// One past the last stored index.
    Index end() const noexcept { return start_ + static_cast<Index>(values_.cols()); }
    std::size_t size() const noexcept { return static_cast<std::size_t>(values_.cols()); }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(values_.rows()); }
    double rho() const noexcept { return rho_; }
    bool empty() const noexcept { return values_.cols() == 0; }

    bool contains(Index k) const noexcept { return k >= start_ && k < end(); }

    /// x_k, or the zero vector outside the window.
    Vector operator[](Index k) const;
    /// Coordinate i of x_k (zero outside the window).
    cplx at(Index k, std::size_t i) const;

    const Matrix& values() const noexcept { return values_; }

private:
    Index start_;
    Matrix values_;
    double rho_;
};

enum class Norm { One, Two, Inf };

double weighted_norm(const WeightedSequence& x, Norm p);

/// (tau^n x)_k = x_{k+n}.
WeightedSequence shift(const WeightedSequence& x, Index n);

/// v at index n, zero elsewhere.
WeightedSequence delta(Index n, const Vector& v, double rho);

/// v on n, ..., n + horizon; zero before n. Indices past the horizon are a
/// truncation of the true (infinite) support.
WeightedSequence chi_geq(Index n, const Vector& v, double rho, Index horizon);

/// (c * u)_n = sum_k c_k u_{n-k}, on the window [u.start, u.start + len + N).
/// Entries with n - u.start <= c.N() are exact; later ones feel truncation.
WeightedSequence convolve(const ConvolutionKernel& c, const WeightedSequence& u);

/// The kernel viewed as a sequence on N with weight rho.
WeightedSequence kernel_sequence(const ConvolutionKernel& c, double rho, std::size_t dim = 1);

/// Values of x on the window [a, b), zero-extended where needed.
WeightedSequence restrict_window(const WeightedSequence& x, Index a, Index b);

/// x restricted to indices >= 0.
WeightedSequence chi_nat(const WeightedSequence& x);

/// Smallest k with ||x_k|| > tol, if any.
std::optional<Index> support_begin(const WeightedSequence& x, double tol = 0.0);

WeightedSequence operator+(const WeightedSequence& a, const WeightedSequence& b);
WeightedSequence operator-(const WeightedSequence& a, const WeightedSequence& b);
WeightedSequence operator*(cplx s, const WeightedSequence& x);

/// max_k ||a_k - b_k||_inf over the union of windows (rho is not compared).
double max_abs_diff(const WeightedSequence& a, const WeightedSequence& b);

}  // namespace fracseq
