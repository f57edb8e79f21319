#include "fracseq/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracseq {

namespace {

void require_same_space(const WeightedSequence& a, const WeightedSequence& b, const char* op)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
    if (a.rho() != b.rho())
        throw std::invalid_argument(std::string(op) + ": sequences live in different weighted spaces");
}

WeightedSequence combine(const WeightedSequence& a, const WeightedSequence& b, double sign)
{
    if (a.empty())
        return WeightedSequence(b.start(), sign * b.values(), b.rho());
    if (b.empty())
        return a;
    const Index lo = std::min(a.start(), b.start());
    const Index hi = std::max(a.end(), b.end());
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(a.dim()), hi - lo);
    out.middleCols(a.start() - lo, a.values().cols()) += a.values();
    out.middleCols(b.start() - lo, b.values().cols()) += sign * b.values();
    return WeightedSequence(lo, std::move(out), a.rho());
}

}  // namespace

WeightedSequence::WeightedSequence(Index start, Matrix values, double rho)
    : start_(start), values_(std::move(values)), rho_(rho)
{
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("WeightedSequence: rho must be positive and finite");
    if (values_.rows() == 0)
        throw std::invalid_argument("WeightedSequence: dimension must be at least 1");
}

WeightedSequence WeightedSequence::zeros(Index start, std::size_t len, std::size_t dim, double rho)
{
    return WeightedSequence(start,
                            Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(len)),
                            rho);
}

Vector WeightedSequence::operator[](Index k) const
{
    if (!contains(k))
        return Vector::Zero(values_.rows());
    return values_.col(k - start_);
}

cplx WeightedSequence::at(Index k, std::size_t i) const
{
    if (!contains(k))
        return {};
    return values_(static_cast<Eigen::Index>(i), k - start_);
}

double weighted_norm(const WeightedSequence& x, Norm p)
{
    double acc = 0.0;
    for (Index j = 0; j < static_cast<Index>(x.size()); ++j) {
        const Index k = x.start() + j;
        const double w = std::pow(x.rho(), -static_cast<double>(k));
        const double nk = x.values().col(j).norm();
        switch (p) {
        case Norm::One:
            acc += nk * w;
            break;
        case Norm::Two: {
            const double t = nk * w;
            acc += t * t;
            break;
        }
        case Norm::Inf:
            acc = std::max(acc, nk * w);
            break;
        }
    }
    return p == Norm::Two ? std::sqrt(acc) : acc;
}

WeightedSequence shift(const WeightedSequence& x, Index n)
{
    return WeightedSequence(x.start() - n, x.values(), x.rho());
}

WeightedSequence delta(Index n, const Vector& v, double rho)
{
    return WeightedSequence(n, Matrix(v), rho);
}

WeightedSequence chi_geq(Index n, const Vector& v, double rho, Index horizon)
{
    if (horizon < 0)
        throw std::invalid_argument("chi_geq: horizon must be nonnegative");
    Matrix m = v.replicate(1, horizon + 1);
    return WeightedSequence(n, std::move(m), rho);
}

WeightedSequence convolve(const ConvolutionKernel& c, const WeightedSequence& u)
{
    if (c.coeffs.empty())
        throw std::invalid_argument("convolve: empty kernel");
    const Index len = static_cast<Index>(u.size());
    const Index N = static_cast<Index>(c.N());
    Matrix out = Matrix::Zero(u.values().rows(), len + N);
    for (Index n = 0; n < len + N; ++n) {
        const Index kmin = std::max<Index>(0, n - len + 1);
        const Index kmax = std::min(n, N);
        for (Index k = kmin; k <= kmax; ++k)
            out.col(n) += c.coeffs[static_cast<std::size_t>(k)] * u.values().col(n - k);
    }
    return WeightedSequence(u.start(), std::move(out), u.rho());
}

WeightedSequence kernel_sequence(const ConvolutionKernel& c, double rho, std::size_t dim)
{
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(c.coeffs.size()));
    for (std::size_t k = 0; k < c.coeffs.size(); ++k)
        m.col(static_cast<Eigen::Index>(k)).setConstant(c.coeffs[k]);
    return WeightedSequence(0, std::move(m), rho);
}

WeightedSequence restrict_window(const WeightedSequence& x, Index a, Index b)
{
    if (b < a)
        throw std::invalid_argument("restrict_window: empty range");
    Matrix m = Matrix::Zero(x.values().rows(), b - a);
    const Index lo = std::max(a, x.start());
    const Index hi = std::min(b, x.end());
    if (lo < hi)
        m.middleCols(lo - a, hi - lo) = x.values().middleCols(lo - x.start(), hi - lo);
    return WeightedSequence(a, std::move(m), x.rho());
}

WeightedSequence chi_nat(const WeightedSequence& x)
{
    const Index a = std::max<Index>(0, x.start());
    return restrict_window(x, a, std::max(a, x.end()));
}

std::optional<Index> support_begin(const WeightedSequence& x, double tol)
{
    for (Index j = 0; j < static_cast<Index>(x.size()); ++j)
        if (x.values().col(j).norm() > tol)
            return x.start() + j;
    return std::nullopt;
}

WeightedSequence operator+(const WeightedSequence& a, const WeightedSequence& b)
{
    require_same_space(a, b, "operator+");
    return combine(a, b, 1.0);
}

WeightedSequence operator-(const WeightedSequence& a, const WeightedSequence& b)
{
    require_same_space(a, b, "operator-");
    return combine(a, b, -1.0);
}

WeightedSequence operator*(cplx s, const WeightedSequence& x)
{
    return WeightedSequence(x.start(), s * x.values(), x.rho());
}

double max_abs_diff(const WeightedSequence& a, const WeightedSequence& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    const Index lo = std::min(a.start(), b.start());
    const Index hi = std::max(a.end(), b.end());
    double worst = 0.0;
    for (Index k = lo; k < hi; ++k)
        worst = std::max(worst, (a[k] - b[k]).cwiseAbs().maxCoeff());
    return worst;
}

}  // namespace fracseq
