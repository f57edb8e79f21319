#include "fracseq/binomial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracseq {

namespace {

void require_finite(double v, const char* what)
{
    if (!std::isfinite(v))
        throw std::domain_error(std::string(what) + ": argument must be finite");
}

bool is_nonpositive_integer(double y)
{
    return y <= 0.0 && std::floor(y) == y;
}

// Sign of Gamma(y) for y off the poles.
double gamma_sign(double y)
{
    if (y > 0.0)
        return 1.0;
    return (static_cast<long long>(std::floor(y)) % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

FracOrder::FracOrder(double alpha) : alpha_(alpha)
{
    require_finite(alpha, "FracOrder");
}

void FracOrder::require_unit_interval(const char* context) const
{
    if (!in_unit_interval())
        throw std::domain_error(std::string(context) + ": alpha must lie in (0, 1), got " +
                                std::to_string(alpha_));
}

double binom(double alpha, std::size_t n)
{
    require_finite(alpha, "binom");
    double c = 1.0;
    for (std::size_t k = 0; k < n; ++k)
        c *= (alpha - static_cast<double>(k)) / static_cast<double>(k + 1);
    return c;
}

double falling_factorial(double x, std::size_t n)
{
    require_finite(x, "falling_factorial");
    double p = 1.0;
    for (std::size_t k = 0; k < n; ++k)
        p *= x - static_cast<double>(k);
    return p;
}

double falling_factorial(double x, double order)
{
    require_finite(x, "falling_factorial");
    require_finite(order, "falling_factorial");

    const double top = x + 1.0;
    const double bottom = x - order + 1.0;
    const bool top_pole = is_nonpositive_integer(top);
    const bool bottom_pole = is_nonpositive_integer(bottom);

    if (bottom_pole && !top_pole)
        return 0.0;
    if (top_pole && !bottom_pole)
        throw std::domain_error("falling_factorial: Gamma(x + 1) has an uncancelled pole");
    if (top_pole && bottom_pole) {
        // Both on poles: the ratio is the limit of the finite product, which
        // only exists for an integer order.
        if (order < 0.0 || std::floor(order) != order)
            throw std::domain_error("falling_factorial: indeterminate pole ratio");
        return falling_factorial(x, static_cast<std::size_t>(order));
    }

    const double log_ratio = std::lgamma(top) - std::lgamma(bottom);
    return gamma_sign(top) * gamma_sign(bottom) * std::exp(log_ratio);
}

ConvolutionKernel make_kernel(double alpha, std::size_t N)
{
    require_finite(alpha, "make_kernel");
    ConvolutionKernel kernel;
    kernel.alpha = alpha;
    kernel.coeffs.resize(N + 1);
    kernel.coeffs[0] = 1.0;
    for (std::size_t k = 0; k < N; ++k) {
        const double kd = static_cast<double>(k);
        kernel.coeffs[k + 1] = kernel.coeffs[k] * (kd - alpha) / (kd + 1.0);
    }
    return kernel;
}

double partial_sum(double alpha, std::size_t n)
{
    require_finite(alpha, "partial_sum");
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        term *= (kd - alpha) / (kd + 1.0);
        sum += term;
    }
    return sum;
}

}  // namespace fracseq
