#pragma once

/**
 * @file solver.hpp
 * @brief Explicit causal solvers for fractional initial value problems.
 *
 * Riemann-Liouville form:  tau (1 - tau^{-1})^alpha u = F(u) + delta_{-1} x
 * Caputo form:             tau (1 - tau^{-1})^alpha u = F(u) + (1 - tau^{-1})^alpha chi_{Z>=-1} x
 *
 * with u supported in N. Both reduce to forward recursions in which u_{n+1}
 * depends on F(u)_0 .. F(u)_n, and F(u)_k = f(u_k) only sees u_k, so no
 * implicit step is ever needed. The full memory of the fractional sum is
 * kept: a solve of N steps costs O(N^2).
 *
 * The right-hand side is only evaluated on N. For a pointwise f with
 * f(0) != 0 the sequence (f(u_n))_{n in Z} is not supported in N; the solver
 * uses its restriction to N.
 */

#include <functional>
#include <variant>

#include "fracseq/sequence.hpp"

namespace fracseq {

enum class IvpKind { RiemannLiouville, Caputo, GrunwaldLetnikov };

class RightHandSide {
public:
    using Pointwise = std::function<Vector(const Vector&)>;

    static RightHandSide linear(Matrix A);
    static RightHandSide pointwise(std::size_t dim, Pointwise f);
    static RightHandSide zero(std::size_t dim);

    Vector operator()(const Vector& u) const;

    std::size_t dim() const noexcept { return dim_; }
    bool is_linear() const noexcept { return std::holds_alternative<Matrix>(f_); }
    /// The matrix of a linear right-hand side, nullptr otherwise.
    const Matrix* matrix() const noexcept { return std::get_if<Matrix>(&f_); }

    RightHandSide scaled(cplx s) const;

private:
    RightHandSide(std::variant<Matrix, Pointwise> f, std::size_t dim);

    std::variant<Matrix, Pointwise> f_;
    std::size_t dim_;
};

struct IvpSpec {
    IvpKind kind = IvpKind::RiemannLiouville;
    double alpha = 0.5;
    Vector x0;
    RightHandSide rhs = RightHandSide::zero(1);
    std::size_t steps = 1;  // solution holds u_0 .. u_steps
    double h = 1.0;         // Grunwald-Letnikov step
    double rho = 2.0;       // weight attached to the returned sequence
};

/// u_{n+1} = (-1)^{n+1} C(-alpha, n+1) u_0 + sum_{k=0}^n (-1)^{n-k} C(-alpha, n-k) F(u)_k
WeightedSequence solve_rl(const IvpSpec& spec);

/// u_{n+1} = u_0 + sum_{k=0}^n (-1)^{n-k} C(-alpha, n-k) F(u)_k
WeightedSequence solve_caputo(const IvpSpec& spec);

/// Riemann-Liouville recursion with F replaced by h^alpha F; entry n is t = n h.
WeightedSequence solve_gl(const IvpSpec& spec);

/// Dispatch on spec.kind.
WeightedSequence solve(const IvpSpec& spec);

/// tau (1 - tau^{-1})^alpha (iota u) - h^alpha F(u) - forcing on indices -1 .. N-1,
/// where u holds u_0 .. u_N. forcing is delta_{-1} x0 (RL, GL) or
/// (1 - tau^{-1})^alpha chi_{Z>=-1} x0 (Caputo). h only matters for GL.
WeightedSequence residual(IvpKind kind, double alpha, const WeightedSequence& u,
                          const RightHandSide& rhs, const Vector& x0, double h = 1.0);

/// max_n ||r_n||_inf / s_n, where s_n is the sum of the magnitudes of the
/// terms that make up r_n. Solutions of unstable problems grow
/// geometrically, so only the relative defect is meaningful.
double relative_residual(IvpKind kind, double alpha, const WeightedSequence& u,
                         const RightHandSide& rhs, const Vector& x0, double h = 1.0);

/// Causal solution of tau (1 - tau^{-1})^alpha u - A u = g for finitely
/// supported g, returned on [g.start() + 1, last]. Built from the
/// convolution form directly, one step per index.
WeightedSequence apply_causal_inverse(const Matrix& A, double alpha, const WeightedSequence& g, Index last);

}  // namespace fracseq
