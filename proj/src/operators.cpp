#include "fracseq/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace fracseq {

namespace {

void require_nat(const WeightedSequence& v, const char* op)
{
    if (v.start() != 0)
        throw std::invalid_argument(std::string(op) + ": expected a sequence on N (start == 0)");
}

// Convolution restricted to the input window, which is exact when the kernel
// has at least len entries.
WeightedSequence causal_apply(double alpha, const WeightedSequence& v)
{
    if (v.empty())
        return v;
    const auto c = make_kernel(alpha, v.size() - 1);
    return restrict_window(convolve(c, v), v.start(), v.end());
}

}  // namespace

WeightedSequence frac_power(double alpha, const WeightedSequence& u, std::optional<std::size_t> N)
{
    const std::size_t n = N.value_or(u.empty() ? 0 : u.size() - 1);
    return convolve(make_kernel(alpha, n), u);
}

WeightedSequence frac_sum(double alpha, const WeightedSequence& v)
{
    if (!(alpha > 0.0))
        throw std::domain_error("frac_sum: alpha must be positive");
    require_nat(v, "frac_sum");
    return causal_apply(-alpha, v);
}

WeightedSequence forward_difference(const WeightedSequence& u)
{
    if (u.empty() || u.end() <= 0)
        return WeightedSequence::zeros(0, 0, u.dim(), u.rho());
    // (tau - 1) u lives on [start - 1, end); chi_N keeps n >= 0.
    const Index lo = std::max<Index>(0, u.start() - 1);
    Matrix out(u.values().rows(), u.end() - lo);
    for (Index n = lo; n < u.end(); ++n)
        out.col(n - lo) = u[n + 1] - u[n];
    return WeightedSequence(lo, std::move(out), u.rho());
}

WeightedSequence rl_delta(double alpha, const WeightedSequence& v)
{
    FracOrder(alpha).require_unit_interval("rl_delta");
    require_nat(v, "rl_delta");
    if (v.size() < 2)
        return WeightedSequence::zeros(0, 0, v.dim(), v.rho());
    const auto summed = frac_sum(1.0 - alpha, v);
    const auto diff = forward_difference(summed);
    return restrict_window(diff, 0, static_cast<Index>(v.size()) - 1);
}

WeightedSequence caputo_delta(double alpha, const WeightedSequence& v)
{
    FracOrder(alpha).require_unit_interval("caputo_delta");
    require_nat(v, "caputo_delta");
    if (v.size() < 2)
        return WeightedSequence::zeros(0, 0, v.dim(), v.rho());
    // Delta v is exact on 0 .. len - 2 only.
    const auto diff = restrict_window(forward_difference(v), 0, static_cast<Index>(v.size()) - 1);
    return frac_sum(1.0 - alpha, diff);
}

WeightedSequence gl_delta(double alpha, double h, const WeightedSequence& v)
{
    FracOrder(alpha).require_unit_interval("gl_delta");
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::domain_error("gl_delta: step h must be positive");
    require_nat(v, "gl_delta");
    return std::pow(h, -alpha) * causal_apply(alpha, v);
}

}  // namespace fracseq
