// Command-line front end: solve, stability, curve, transform, kernel.
//
// Exit codes: 0 success, 2 malformed input or usage, 3 domain error
// (alpha outside (0, 1), rho <= 1, aliasing, ...), 1 anything else.
// Data goes to --out (or stdout); human-readable messages go to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fracseq/io.hpp"
#include "fracseq/operators.hpp"

namespace {

using namespace fracseq;
using nlohmann::json;

constexpr int kExitFormat = 2;
constexpr int kExitDomain = 3;

std::optional<double> env_tolerance()
{
    const char* raw = std::getenv("FRACSEQ_TOL");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    std::istringstream in(raw);
    in.imbue(std::locale::classic());
    double v = 0.0;
    if (!(in >> v) || !(v > 0.0))
        throw FormatError("FRACSEQ_TOL must be a positive number");
    return v;
}

// Writes through a file when a path is given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw std::runtime_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open '" + path + "'");
    return in;
}

json read_json(const std::string& path)
{
    auto in = open_input(path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

// Largest n0 such that |u_n| is non-increasing from n0 on.
std::size_t monotone_tail_start(const WeightedSequence& u)
{
    std::size_t n0 = u.size() - 1;
    while (n0 > 0 && u[static_cast<Index>(n0) - 1].norm() >= u[static_cast<Index>(n0)].norm())
        --n0;
    return n0;
}

int cmd_solve(const std::string& spec_path, const std::string& out)
{
    IvpSpec spec;
    try {
        spec = parse_ivp_spec(read_json(spec_path));
    } catch (const json::exception& e) {
        throw FormatError(e.what());
    }
    const auto u = solve(spec);

    Sink sink(out);
    if (spec.kind == IvpKind::GrunwaldLetnikov)
        write_grid_csv(sink.stream(), u, spec.h);
    else
        write_sequence_csv(sink.stream(), u);

    const char* kind = spec.kind == IvpKind::RiemannLiouville ? "rl"
                       : spec.kind == IvpKind::Caputo         ? "caputo"
                                                              : "gl";
    const std::size_t tail = monotone_tail_start(u);
    std::ostream& summary = out.empty() ? std::cerr : std::cout;
    summary << "N=" << spec.steps << " alpha=" << format_double(spec.alpha) << " kind=" << kind
            << " terminal_norm=" << format_double(u[static_cast<Index>(spec.steps)].norm())
            << " monotone_tail=" << (tail <= spec.steps / 2 ? "true" : "false")
            << " monotone_from=" << tail << '\n';
    return 0;
}

int cmd_stability(double alpha, double lambda_re, double lambda_im, const std::string& matrix_path,
                  std::optional<double> rho, std::size_t samples, const std::string& out)
{
    FracOrder(alpha).require_unit_interval("stability");
    const auto tol = env_tolerance();
    json result;
    if (matrix_path.empty()) {
        result = verdict_to_json(matignon_check({lambda_re, lambda_im}, alpha, tol.value_or(1e-12)));
    } else {
        Matrix entries;
        try {
            entries = parse_matrix(read_json(matrix_path));
        } catch (const json::exception& e) {
            throw FormatError(e.what());
        }
        const OperatorMatrix A(std::move(entries));
        result["alpha"] = alpha;
        result["spectral_radius"] = spectral_radius(A);
        result["causal_radius"] = causal_radius(A, alpha);
        result["eigenvalues"] = json::array();
        for (const cplx& l : spectrum(A))
            result["eigenvalues"].push_back(verdict_to_json(matignon_check(l, alpha, tol.value_or(1e-12))));
        if (rho) {
            const auto inv = invertibility_check(A, *rho, alpha, samples, tol);
            result["invertibility"] = {{"rho", *rho}, {"invertible", inv.invertible},
                                       {"min_distance", inv.min_distance}};
        }
    }
    Sink sink(out);
    sink.stream() << result.dump(2) << '\n';
    return 0;
}

int cmd_curve(double alpha, double rho, std::size_t samples, const std::string& out)
{
    if (!(rho > 1.0))
        throw std::domain_error("curve: rho must exceed 1");
    const auto curve = symbol_curve(rho, alpha, samples);
    Sink sink(out);
    write_curve_csv(sink.stream(), curve);
    return 0;
}

int cmd_transform(const std::string& input, double rho, std::size_t samples, const std::string& mode,
                  std::optional<Index> window_start, std::optional<Index> window_end, const std::string& out)
{
    Sink sink(out);
    auto in = open_input(input);
    if (mode == "inverse") {
        const auto s = read_transform_csv(in, rho);
        const Index a = window_start.value_or(0);
        const Index b = window_end.value_or(a + static_cast<Index>(s.M()) - 1);
        write_sequence_csv(sink.stream(), inverse_ztransform(s, a, b));
        return 0;
    }

    const auto x = read_sequence_csv(in);
    if (mode == "forward") {
        write_transform_csv(sink.stream(), ztransform(x, rho, samples));
    } else if (mode == "parseval") {
        const double err = parseval_check(x, rho, samples);
        sink.stream() << "relative_error=" << format_double(err) << '\n';
    } else if (mode == "support") {
        const auto d = positive_support_test(x, rho, default_hardy_radii(rho), samples);
        json j;
        j["verdict"] = d.positive ? "positive" : "not-positive";
        j["literal_support"] = d.literal_positive ? "positive" : "not-positive";
        j["agrees"] = d.agrees();
        j["radii"] = d.radii;
        j["integrals"] = d.integrals;
        j["growth_ratios"] = d.growth_ratios;
        sink.stream() << j.dump(2) << '\n';
    } else {
        throw FormatError("transform: mode must be forward, inverse, parseval or support");
    }
    return 0;
}

int cmd_kernel(double alpha, std::size_t steps, const std::string& out)
{
    const auto c = make_kernel(alpha, steps);
    Sink sink(out);
    sink.stream() << "k,c_k\n";
    for (std::size_t k = 0; k < c.coeffs.size(); ++k)
        sink.stream() << k << ',' << format_double(c.coeffs[k]) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fractional difference equations on weighted sequence spaces"};
    app.require_subcommand(1);

    std::string out;
    double alpha = 0.5;
    double rho = 2.0;
    std::size_t samples = 4096;

    auto* solve_cmd = app.add_subcommand("solve", "Solve an initial value problem from a JSON spec");
    std::string spec_path;
    solve_cmd->add_option("spec", spec_path, "IvpSpec JSON file")->required();
    solve_cmd->add_option("--out", out, "Solution CSV (stdout if omitted)");

    auto* stab_cmd = app.add_subcommand("stability", "Matignon-type stability verdicts");
    double lambda_re = 0.0, lambda_im = 0.0;
    std::string matrix_path;
    std::optional<double> inv_rho;
    stab_cmd->add_option("--alpha", alpha, "Fractional order in (0, 1)")->required();
    stab_cmd->add_option("--lambda-re", lambda_re, "Real part of the eigenvalue");
    stab_cmd->add_option("--lambda-im", lambda_im, "Imaginary part of the eigenvalue");
    stab_cmd->add_option("--matrix", matrix_path, "JSON matrix [[[re, im], ...], ...]");
    stab_cmd->add_option("--rho", inv_rho, "Radius for the invertibility check (matrix mode)");
    stab_cmd->add_option("--samples", samples, "Circle samples for the invertibility check");
    stab_cmd->add_option("--out", out, "Verdict JSON (stdout if omitted)");

    auto* curve_cmd = app.add_subcommand("curve", "Sample f(z) = z (1 - 1/z)^alpha on |z| = rho");
    curve_cmd->add_option("--alpha", alpha, "Fractional order")->required();
    curve_cmd->add_option("--rho", rho, "Circle radius, > 1")->required();
    curve_cmd->add_option("--samples", samples, "Number of samples (>= 8)");
    curve_cmd->add_option("--out", out, "Curve CSV (stdout if omitted)");

    auto* tr_cmd = app.add_subcommand("transform", "Z-transform tools");
    std::string input, mode = "forward";
    std::optional<Index> window_start, window_end;
    tr_cmd->add_option("input", input, "Sequence CSV (transform CSV for --mode inverse)")->required();
    tr_cmd->add_option("--rho", rho, "Circle radius")->required();
    tr_cmd->add_option("--samples", samples, "Number of samples");
    tr_cmd->add_option("--mode", mode, "forward | inverse | parseval | support");
    tr_cmd->add_option("--window-start", window_start, "First index recovered by --mode inverse");
    tr_cmd->add_option("--window-end", window_end, "Last index recovered by --mode inverse");
    tr_cmd->add_option("--out", out, "Output file (stdout if omitted)");

    auto* kernel_cmd = app.add_subcommand("kernel", "Dump the coefficients (-1)^k C(alpha, k)");
    std::size_t steps = 16;
    kernel_cmd->add_option("--alpha", alpha, "Exponent")->required();
    kernel_cmd->add_option("--steps", steps, "Truncation length N");
    kernel_cmd->add_option("--out", out, "Kernel CSV (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitFormat;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(spec_path, out);
        if (*stab_cmd)
            return cmd_stability(alpha, lambda_re, lambda_im, matrix_path, inv_rho, samples, out);
        if (*curve_cmd)
            return cmd_curve(alpha, rho, samples, out);
        if (*tr_cmd)
            return cmd_transform(input, rho, samples, mode, window_start, window_end, out);
        if (*kernel_cmd)
            return cmd_kernel(alpha, steps, out);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
