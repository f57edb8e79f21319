#include "fracseq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracseq {

namespace {

void validate(const IvpSpec& spec, IvpKind expected, const char* op)
{
    if (spec.kind != expected)
        throw std::invalid_argument(std::string(op) + ": spec has the wrong kind");
    FracOrder(spec.alpha).require_unit_interval(op);
    if (spec.steps < 1)
        throw std::invalid_argument(std::string(op) + ": steps must be at least 1");
    if (static_cast<std::size_t>(spec.x0.size()) != spec.rhs.dim())
        throw std::invalid_argument(std::string(op) + ": initial value and right-hand side dimensions differ");
}

// Shared forward recursion. The homogeneous part of u_{n+1} is
// memory[n+1] * x0 where memory is either the -alpha kernel (RL) or all ones
// (Caputo).
WeightedSequence recurse(const IvpSpec& spec, const RightHandSide& rhs, bool caputo)
{
    const std::size_t N = spec.steps;
    const auto g = make_kernel(-spec.alpha, N);
    const Eigen::Index d = spec.x0.size();

    Matrix u(d, static_cast<Eigen::Index>(N + 1));
    Matrix F(d, static_cast<Eigen::Index>(N));
    u.col(0) = spec.x0;
    for (std::size_t n = 0; n < N; ++n) {
        F.col(static_cast<Eigen::Index>(n)) = rhs(u.col(static_cast<Eigen::Index>(n)));
        Vector next = (caputo ? 1.0 : g.coeffs[n + 1]) * spec.x0;
        for (std::size_t k = 0; k <= n; ++k)
            next += g.coeffs[n - k] * F.col(static_cast<Eigen::Index>(k));
        u.col(static_cast<Eigen::Index>(n + 1)) = next;
    }
    return WeightedSequence(0, std::move(u), spec.rho);
}

}  // namespace

RightHandSide::RightHandSide(std::variant<Matrix, Pointwise> f, std::size_t dim)
    : f_(std::move(f)), dim_(dim)
{
}

RightHandSide RightHandSide::linear(Matrix A)
{
    if (A.rows() != A.cols() || A.rows() == 0)
        throw std::invalid_argument("RightHandSide: matrix must be square and nonempty");
    if (!A.allFinite())
        throw std::invalid_argument("RightHandSide: matrix entries must be finite");
    const auto d = static_cast<std::size_t>(A.rows());
    return RightHandSide(std::move(A), d);
}

RightHandSide RightHandSide::pointwise(std::size_t dim, Pointwise f)
{
    if (dim == 0 || !f)
        throw std::invalid_argument("RightHandSide: pointwise map needs a dimension and a callable");
    return RightHandSide(std::move(f), dim);
}

RightHandSide RightHandSide::zero(std::size_t dim)
{
    return linear(Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
}

Vector RightHandSide::operator()(const Vector& u) const
{
    if (const auto* A = std::get_if<Matrix>(&f_))
        return (*A) * u;
    Vector out = std::get<Pointwise>(f_)(u);
    if (static_cast<std::size_t>(out.size()) != dim_)
        throw std::invalid_argument("RightHandSide: pointwise map returned the wrong dimension");
    return out;
}

RightHandSide RightHandSide::scaled(cplx s) const
{
    if (const auto* A = std::get_if<Matrix>(&f_))
        return linear(s * (*A));
    auto f = std::get<Pointwise>(f_);
    return pointwise(dim_, [f, s](const Vector& u) -> Vector { return s * f(u); });
}

WeightedSequence solve_rl(const IvpSpec& spec)
{
    validate(spec, IvpKind::RiemannLiouville, "solve_rl");
    return recurse(spec, spec.rhs, false);
}

WeightedSequence solve_caputo(const IvpSpec& spec)
{
    validate(spec, IvpKind::Caputo, "solve_caputo");
    return recurse(spec, spec.rhs, true);
}

WeightedSequence solve_gl(const IvpSpec& spec)
{
    if (!(spec.h > 0.0) || !std::isfinite(spec.h))
        throw std::domain_error("solve_gl: step h must be positive");
    validate(spec, IvpKind::GrunwaldLetnikov, "solve_gl");
    return recurse(spec, spec.rhs.scaled(std::pow(spec.h, spec.alpha)), false);
}

WeightedSequence solve(const IvpSpec& spec)
{
    switch (spec.kind) {
    case IvpKind::RiemannLiouville:
        return solve_rl(spec);
    case IvpKind::Caputo:
        return solve_caputo(spec);
    case IvpKind::GrunwaldLetnikov:
        return solve_gl(spec);
    }
    throw std::invalid_argument("solve: unknown kind");
}

namespace {

struct ResidualTerms {
    WeightedSequence defect;
    std::vector<double> scale;
};

ResidualTerms residual_terms(IvpKind kind, double alpha, const WeightedSequence& u,
                             const RightHandSide& rhs, const Vector& x0, double h)
{
    FracOrder(alpha).require_unit_interval("residual");
    if (u.start() != 0)
        throw std::invalid_argument("residual: expected a sequence on N");
    if (u.size() < 2)
        throw std::invalid_argument("residual: window too short, need u_0 .. u_N with N >= 1");
    if (u.dim() != rhs.dim() || static_cast<std::size_t>(x0.size()) != u.dim())
        throw std::invalid_argument("residual: dimension mismatch");
    if (kind == IvpKind::GrunwaldLetnikov && !(h > 0.0))
        throw std::domain_error("residual: step h must be positive");

    const Index N = static_cast<Index>(u.size()) - 1;
    const auto c = make_kernel(alpha, static_cast<std::size_t>(N));
    const double gain = kind == IvpKind::GrunwaldLetnikov ? std::pow(h, alpha) : 1.0;

    Matrix r(u.values().rows(), N + 1);
    std::vector<double> scale(static_cast<std::size_t>(N + 1));
    for (Index n = -1; n < N; ++n) {
        // (tau (1 - tau^{-1})^alpha u)_n = sum_{k=0}^{n+1} c_k u_{n+1-k}
        Vector lhs = Vector::Zero(u.values().rows());
        double mag = 0.0;
        for (Index k = 0; k <= n + 1; ++k) {
            const Vector term = c.coeffs[static_cast<std::size_t>(k)] * u.values().col(n + 1 - k);
            lhs += term;
            mag += term.cwiseAbs().maxCoeff();
        }
        Vector f = Vector::Zero(u.values().rows());
        if (n >= 0)
            f = gain * rhs(u.values().col(n));
        Vector forcing = Vector::Zero(u.values().rows());
        if (kind == IvpKind::Caputo)
            forcing = partial_sum(alpha, static_cast<std::size_t>(n + 1)) * x0;
        else if (n == -1)
            forcing = x0;
        r.col(n + 1) = lhs - f - forcing;
        scale[static_cast<std::size_t>(n + 1)] =
            mag + f.cwiseAbs().maxCoeff() + forcing.cwiseAbs().maxCoeff();
    }
    return {WeightedSequence(-1, std::move(r), u.rho()), std::move(scale)};
}

}  // namespace

WeightedSequence residual(IvpKind kind, double alpha, const WeightedSequence& u,
                          const RightHandSide& rhs, const Vector& x0, double h)
{
    return residual_terms(kind, alpha, u, rhs, x0, h).defect;
}

double relative_residual(IvpKind kind, double alpha, const WeightedSequence& u,
                         const RightHandSide& rhs, const Vector& x0, double h)
{
    const auto terms = residual_terms(kind, alpha, u, rhs, x0, h);
    double worst = 0.0;
    for (std::size_t j = 0; j < terms.scale.size(); ++j) {
        const double err = terms.defect.values().col(static_cast<Eigen::Index>(j)).cwiseAbs().maxCoeff();
        if (err == 0.0)
            continue;
        worst = std::max(worst, terms.scale[j] > 0.0 ? err / terms.scale[j] : INFINITY);
    }
    return worst;
}

WeightedSequence apply_causal_inverse(const Matrix& A, double alpha, const WeightedSequence& g, Index last)
{
    FracOrder(alpha).require_unit_interval("apply_causal_inverse");
    if (A.rows() != A.cols() || static_cast<std::size_t>(A.rows()) != g.dim())
        throw std::invalid_argument("apply_causal_inverse: dimension mismatch");
    const Index first = g.start() + 1;
    if (last < first)
        throw std::invalid_argument("apply_causal_inverse: empty output window");

    const auto c = make_kernel(alpha, static_cast<std::size_t>(last - first));
    Matrix u = Matrix::Zero(A.rows(), last - first + 1);
    // Row n of the equation: sum_{k>=0} c_k u_{n+1-k} - A u_n = g_n, c_0 = 1.
    for (Index n = first - 1; n < last; ++n) {
        Vector next = g[n];
        if (n >= first)
            next += A * u.col(n - first);
        for (Index k = 1; k <= n + 1 - first; ++k)
            next -= c.coeffs[static_cast<std::size_t>(k)] * u.col(n + 1 - k - first);
        u.col(n + 1 - first) = next;
    }
    return WeightedSequence(first, std::move(u), g.rho());
}

}  // namespace fracseq
