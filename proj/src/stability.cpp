#include "fracseq/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracseq {

namespace {

void require_outside_unit_disc(cplx z, const char* op)
{
    if (!(std::abs(z) > 1.0))
        throw std::domain_error(std::string(op) + ": requires |z| > 1");
}

cplx on_circle(double rho, double theta)
{
    return std::polar(rho, theta);
}

double point_segment_distance(cplx p, cplx a, cplx b)
{
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0)
        return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

// One-sided distance from the samples of a to the polyline of b. Samples are
// matched to segments of b by angle, checking a few neighbours each way.
double directed_distance(const SymbolCurve& a, const SymbolCurve& b)
{
    const std::size_t mb = b.M();
    double worst = 0.0;
    for (const auto& s : a.samples) {
        const double pos = s.theta / (2.0 * std::numbers::pi) * static_cast<double>(mb);
        const auto base = static_cast<std::ptrdiff_t>(std::floor(pos));
        double best = INFINITY;
        for (std::ptrdiff_t off = -2; off <= 2; ++off) {
            const auto i = static_cast<std::size_t>(((base + off) % static_cast<std::ptrdiff_t>(mb) + mb) % mb);
            const auto& p = b.samples[i];
            const auto& q = b.samples[(i + 1) % mb];
            best = std::min(best, point_segment_distance(s.f, p.f, q.f));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

double golden_min(const auto& fn, double lo, double hi, double& arg)
{
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = fn(c), fd = fn(d);
    for (int it = 0; it < 100 && (b - a) > 1e-15; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = fn(d);
        }
    }
    arg = fc < fd ? c : d;
    return std::min(fc, fd);
}

// Increasing real function mu (1 - 1/mu)^alpha on (1, inf).
double radial_symbol(double mu, double alpha)
{
    return mu * std::pow(1.0 - 1.0 / mu, alpha);
}

// Bisection for an increasing function on [lo, hi] with fn(lo) < target <= fn(hi).
double bisect_increasing(const auto& fn, double target, double lo, double hi)
{
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (fn(mid) < target ? lo : hi) = mid;
    }
    return hi;
}

// Real root of f(z) = lambda for real lambda outside [-2^alpha, 0].
cplx real_witness(double lambda, double alpha)
{
    if (lambda > 0.0) {
        // f(mu) = mu (1 - 1/mu)^alpha >= mu - 1, so mu = lambda + 1 brackets.
        const double mu = bisect_increasing([alpha](double m) { return radial_symbol(m, alpha); },
                                            lambda, 1.0, lambda + 1.0);
        return {mu, 0.0};
    }
    // f(-s) = -s (1 + 1/s)^alpha; s (1 + 1/s)^alpha is increasing from 2^alpha
    // and exceeds s.
    const auto g = [alpha](double s) { return s * std::pow(1.0 + 1.0 / s, alpha); };
    const double s = bisect_increasing(g, -lambda, 1.0, std::max(2.0, -lambda));
    return {-s, 0.0};
}

}  // namespace

cplx binomial_power(cplx z, double alpha)
{
    require_outside_unit_disc(z, "binomial_power");
    return std::exp(alpha * std::log(1.0 - 1.0 / z));
}

cplx symbol(cplx z, double alpha)
{
    require_outside_unit_disc(z, "symbol");
    return z * binomial_power(z, alpha);
}

cplx symbol_derivative(cplx z, double alpha)
{
    require_outside_unit_disc(z, "symbol_derivative");
    const cplx w = 1.0 / z;
    return std::exp((alpha - 1.0) * std::log(1.0 - w)) * (1.0 - w + alpha * w);
}

double boundary_constant(double alpha)
{
    return -std::pow(2.0, alpha);
}

SymbolCurve symbol_curve(double rho, double alpha, std::size_t M)
{
    if (!(rho > 1.0))
        throw std::domain_error("symbol_curve: rho must exceed 1");
    if (M < 8)
        throw std::invalid_argument("symbol_curve: need at least 8 samples");
    SymbolCurve curve{rho, alpha, {}};
    curve.samples.reserve(M);
    for (std::size_t j = 0; j < M; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
        const cplx z = on_circle(rho, theta);
        curve.samples.push_back({theta, z, symbol(z, alpha)});
    }
    return curve;
}

double curve_distance(const SymbolCurve& a, const SymbolCurve& b)
{
    if (a.M() == 0 || b.M() == 0)
        throw std::invalid_argument("curve_distance: empty curve");
    return std::max(directed_distance(a, b), directed_distance(b, a));
}

double binom_estimate_margin(double rho, double alpha, std::size_t M)
{
    if (!(rho > 1.0))
        throw std::domain_error("binom_estimate_margin: rho must exceed 1");
    if (M == 0)
        throw std::invalid_argument("binom_estimate_margin: need samples");
    double lowest = INFINITY;
    for (std::size_t j = 0; j < M; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
        lowest = std::min(lowest, std::abs(binomial_power(on_circle(rho, theta), alpha)));
    }
    return lowest - std::pow(1.0 - 1.0 / rho, alpha);
}

OperatorMatrix::OperatorMatrix(Matrix entries) : entries_(std::move(entries))
{
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw std::invalid_argument("OperatorMatrix: must be square and nonempty");
    if (!entries_.allFinite())
        throw std::domain_error("OperatorMatrix: entries must be finite");
}

std::vector<cplx> spectrum(const OperatorMatrix& A)
{
    Eigen::ComplexEigenSolver<Matrix> solver(A.entries(), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectrum: eigenvalue iteration did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double spectral_radius(const OperatorMatrix& A)
{
    double r = 0.0;
    for (const cplx& l : spectrum(A))
        r = std::max(r, std::abs(l));
    return r;
}

double causal_radius(double r, double alpha)
{
    FracOrder(alpha).require_unit_interval("causal_radius");
    if (!(r >= 0.0))
        throw std::invalid_argument("causal_radius: spectral radius must be nonnegative");
    if (r == 0.0)
        return 1.0;
    return bisect_increasing([alpha](double m) { return radial_symbol(m, alpha); }, r, 1.0, r + 1.0);
}

double causal_radius(const OperatorMatrix& A, double alpha)
{
    return causal_radius(spectral_radius(A), alpha);
}

InvertibilityResult invertibility_check(const OperatorMatrix& A, double rho, double alpha, std::size_t M,
                                        std::optional<double> tol)
{
    const auto curve = symbol_curve(rho, alpha, M);
    InvertibilityResult result;
    result.min_distance = INFINITY;
    for (const cplx& lambda : spectrum(A)) {
        std::size_t best = 0;
        double dist = INFINITY;
        for (std::size_t j = 0; j < curve.M(); ++j) {
            const double dj = std::abs(curve.samples[j].f - lambda);
            if (dj < dist) {
                dist = dj;
                best = j;
            }
        }
        const double step = 2.0 * std::numbers::pi / static_cast<double>(curve.M());
        const double centre = curve.samples[best].theta;
        double theta = centre;
        const double refined = golden_min(
            [&](double t) { return std::abs(symbol(on_circle(rho, t), alpha) - lambda); },
            centre - step, centre + step, theta);
        if (refined < dist)
            dist = refined;
        else
            theta = centre;

        const double threshold = tol.value_or(1e-9 * (1.0 + std::abs(lambda)));
        if (dist < threshold)
            result.invertible = false;
        if (dist < result.min_distance) {
            result.min_distance = dist;
            result.nearest_lambda = lambda;
            result.nearest_z = on_circle(rho, theta);
        }
    }
    return result;
}

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::SufficientStable:
        return "SufficientStable";
    case Classification::NecessaryFail:
        return "NecessaryFail";
    case Classification::Boundary:
        return "Boundary";
    case Classification::Indeterminate:
        return "Indeterminate";
    }
    return "Indeterminate";
}

std::optional<cplx> solve_symbol(cplx lambda, double alpha)
{
    FracOrder(alpha).require_unit_interval("solve_symbol");
    const double scale = 1.0 + std::abs(lambda);
    const double accept = 1e-12 * scale;

    std::vector<cplx> starts;
    if (std::abs(lambda + alpha) > 1.0)
        starts.push_back(lambda + alpha);  // f(z) = z - alpha + O(1/z)
    for (double r : {1.05, 1.5, 3.0, 1.0 + std::abs(lambda), 2.0 * scale})
        for (int j = 0; j < 16; ++j)
            starts.push_back(std::polar(r, 2.0 * std::numbers::pi * (j + 0.5) / 16.0));

    for (cplx z : starts) {
        cplx g = symbol(z, alpha) - lambda;
        for (int it = 0; it < 100 && std::abs(g) > accept; ++it) {
            const cplx dz = -g / symbol_derivative(z, alpha);
            double t = 1.0;
            bool moved = false;
            for (int half = 0; half < 40; ++half, t *= 0.5) {
                const cplx trial = z + t * dz;
                if (std::abs(trial) <= 1.0)
                    continue;
                const cplx gt = symbol(trial, alpha) - lambda;
                if (std::abs(gt) < std::abs(g)) {
                    z = trial;
                    g = gt;
                    moved = true;
                    break;
                }
            }
            if (!moved)
                break;
        }
        if (std::abs(g) <= accept && std::abs(z) > 1.0)
            return z;
    }
    return std::nullopt;
}

StabilityVerdict matignon_check(cplx lambda, double alpha, double tol)
{
    FracOrder(alpha).require_unit_interval("matignon_check");
    StabilityVerdict verdict;
    verdict.lambda = lambda;

    const double scale = 1.0 + std::abs(lambda);
    if (std::abs(lambda.imag()) <= tol * scale) {
        const double l = lambda.real();
        const double edge = boundary_constant(alpha);
        if (std::abs(l) <= tol * scale || std::abs(l - edge) <= tol * scale) {
            verdict.classification = Classification::Boundary;
        } else if (l > edge && l < 0.0) {
            verdict.classification = Classification::SufficientStable;
        } else {
            verdict.classification = Classification::NecessaryFail;
            verdict.witness_z = real_witness(l, alpha);
            verdict.witness_radius = std::abs(*verdict.witness_z);
        }
        return verdict;
    }

    if (auto z = solve_symbol(lambda, alpha)) {
        verdict.classification = Classification::NecessaryFail;
        verdict.witness_z = *z;
        verdict.witness_radius = std::abs(*z);
    } else {
        verdict.classification = Classification::Indeterminate;
    }
    return verdict;
}

}  // namespace fracseq
