#include "fracseq/ztransform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracseq {

namespace {

// e^{sign 2 pi i m / M}, m = 0 .. M-1. Indexing by (j k) mod M keeps the
// phases exact for large k.
std::vector<cplx> unit_roots(std::size_t M, double sign)
{
    std::vector<cplx> w(M);
    for (std::size_t m = 0; m < M; ++m)
        w[m] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M));
    return w;
}

std::size_t phase_index(std::size_t j, Index k, std::size_t M)
{
    const auto Mi = static_cast<Index>(M);
    const Index km = ((k % Mi) + Mi) % Mi;
    return static_cast<std::size_t>((static_cast<Index>(j) * km) % Mi);
}

double circle_energy(const TransformSamples& s)
{
    return s.values.colwise().squaredNorm().sum() / static_cast<double>(s.M());
}

double weighted_energy(const WeightedSequence& x, double rho)
{
    double e = 0.0;
    for (Index j = 0; j < static_cast<Index>(x.size()); ++j) {
        const double w = std::pow(rho, -static_cast<double>(x.start() + j));
        e += x.values().col(j).squaredNorm() * w * w;
    }
    return e;
}

}  // namespace

TransformSamples ztransform(const WeightedSequence& x, double rho, std::size_t M)
{
    if (M < 1)
        throw std::invalid_argument("ztransform: need at least one sample");
    if (!(rho > 0.0))
        throw std::invalid_argument("ztransform: rho must be positive");

    TransformSamples out;
    out.rho = rho;
    out.theta.resize(M);
    out.z.resize(M);
    out.values = Matrix::Zero(static_cast<Eigen::Index>(x.dim()), static_cast<Eigen::Index>(M));
    const auto w = unit_roots(M, -1.0);

    std::vector<double> weight(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        weight[i] = std::pow(rho, -static_cast<double>(x.start() + static_cast<Index>(i)));

    for (std::size_t j = 0; j < M; ++j) {
        out.theta[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
        out.z[j] = std::polar(rho, out.theta[j]);
        auto col = out.values.col(static_cast<Eigen::Index>(j));
        for (std::size_t i = 0; i < x.size(); ++i) {
            const Index k = x.start() + static_cast<Index>(i);
            col += (weight[i] * w[phase_index(j, k, M)]) * x.values().col(static_cast<Eigen::Index>(i));
        }
    }
    return out;
}

WeightedSequence inverse_ztransform(const TransformSamples& samples, Index a, Index b)
{
    const std::size_t M = samples.M();
    if (b < a)
        throw std::invalid_argument("inverse_ztransform: empty window");
    if (static_cast<std::size_t>(b - a + 1) > M)
        throw std::invalid_argument("inverse_ztransform: window longer than the sample count (aliasing)");

    const auto w = unit_roots(M, 1.0);
    Matrix x = Matrix::Zero(samples.values.rows(), b - a + 1);
    for (Index k = a; k <= b; ++k) {
        auto col = x.col(k - a);
        for (std::size_t j = 0; j < M; ++j)
            col += w[phase_index(j, k, M)] * samples.values.col(static_cast<Eigen::Index>(j));
        col *= std::pow(samples.rho, static_cast<double>(k)) / static_cast<double>(M);
    }
    return WeightedSequence(a, std::move(x), samples.rho);
}

double parseval_check(const WeightedSequence& x, double rho, std::size_t M)
{
    if (M < 2 * x.size())
        throw std::invalid_argument("parseval_check: need M >= 2 * window length");
    const double lhs = weighted_energy(x, rho);
    if (lhs == 0.0)
        return 0.0;
    return std::abs(lhs - circle_energy(ztransform(x, rho, M))) / lhs;
}

double multiplication_equivalence_check(const WeightedSequence& x, double rho, std::size_t M)
{
    const auto shifted = ztransform(shift(x, 1), rho, M);
    const auto plain = ztransform(x, rho, M);
    double worst = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        worst = std::max(worst, (shifted.values.col(jj) - plain.z[j] * plain.values.col(jj)).norm());
    }
    return worst;
}

std::vector<double> default_hardy_radii(double rho)
{
    return {rho, 2.0 * rho, 4.0 * rho, 8.0 * rho};
}

SupportDiagnostic positive_support_test(const WeightedSequence& x, double rho, const std::vector<double>& radii,
                                        std::size_t M, double slack)
{
    if (radii.empty())
        throw std::invalid_argument("positive_support_test: no radii given");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] >= rho) || (i > 0 && !(radii[i] > radii[i - 1])))
            throw std::invalid_argument("positive_support_test: radii must increase and start at or above rho");
    }

    SupportDiagnostic d;
    d.radii = radii;
    for (double mu : radii)
        d.integrals.push_back(circle_energy(ztransform(x, mu, M)));

    for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
        const double ratio = d.integrals[i] > 0.0 ? d.integrals[i + 1] / d.integrals[i] : 1.0;
        d.growth_ratios.push_back(ratio);
        const double q = radii[i + 1] / radii[i];
        if (ratio > q * q - slack)
            d.positive = false;
    }

    if (auto first = support_begin(x))
        d.literal_positive = *first >= 0;
    return d;
}

}  // namespace fracseq
