#include "fracseq/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace fracseq {

namespace {

using nlohmann::json;

cplx parse_complex(const json& j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw FormatError("expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(cplx z)
{
    return json::array({z.real(), z.imag()});
}

double parse_double(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r'))
        s.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw FormatError("malformed number '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        out.push_back(line.substr(pos, comma - pos));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

void write_rows(std::ostream& os, const WeightedSequence& x, const auto& index_text)
{
    os << "# rho=" << format_double(x.rho()) << ",dim=" << x.dim() << '\n';
    os << "index";
    for (std::size_t i = 0; i < x.dim(); ++i)
        os << ",re_" << i << ",im_" << i;
    os << '\n';
    for (Index k = x.start(); k < x.end(); ++k) {
        os << index_text(k);
        for (std::size_t i = 0; i < x.dim(); ++i) {
            const cplx v = x.at(k, i);
            os << ',' << format_double(v.real()) << ',' << format_double(v.imag());
        }
        os << '\n';
    }
}

}  // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc())
        throw FormatError("cannot format number");
    return std::string(buf, ptr);
}

void write_sequence_csv(std::ostream& os, const WeightedSequence& x)
{
    write_rows(os, x, [](Index k) { return std::to_string(k); });
}

void write_grid_csv(std::ostream& os, const WeightedSequence& x, double h)
{
    write_rows(os, x, [h](Index k) { return format_double(static_cast<double>(k) * h); });
}

WeightedSequence read_sequence_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line.rfind("# ", 0) != 0)
        throw FormatError("sequence CSV: missing '# rho=...,dim=...' header");

    double rho = 0.0;
    std::size_t dim = 0;
    for (auto field : split(std::string_view(line).substr(2))) {
        const auto eq = field.find('=');
        if (eq == std::string_view::npos)
            throw FormatError("sequence CSV: malformed header field");
        const auto key = field.substr(0, eq);
        const auto value = field.substr(eq + 1);
        if (key == "rho")
            rho = parse_double(value);
        else if (key == "dim")
            dim = static_cast<std::size_t>(parse_double(value));
    }
    if (!(rho > 0.0) || dim == 0)
        throw FormatError("sequence CSV: header needs rho > 0 and dim >= 1");
    if (!std::getline(is, line) || line.rfind("index", 0) != 0)
        throw FormatError("sequence CSV: missing column header");

    std::vector<Index> idx;
    std::vector<Vector> rows;
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split(line);
        if (fields.size() != 1 + 2 * dim)
            throw FormatError("sequence CSV: wrong number of columns");
        const double k = parse_double(fields[0]);
        if (std::floor(k) != k)
            throw FormatError("sequence CSV: index must be an integer");
        Vector v(static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < dim; ++i)
            v(static_cast<Eigen::Index>(i)) = {parse_double(fields[1 + 2 * i]), parse_double(fields[2 + 2 * i])};
        idx.push_back(static_cast<Index>(k));
        rows.push_back(std::move(v));
    }
    if (idx.empty())
        return WeightedSequence::zeros(0, 0, dim, rho);

    const auto [lo, hi] = std::minmax_element(idx.begin(), idx.end());
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), *hi - *lo + 1);
    const Index start = *lo;
    for (std::size_t r = 0; r < idx.size(); ++r)
        m.col(idx[r] - start) = rows[r];
    return WeightedSequence(start, std::move(m), rho);
}

void write_curve_csv(std::ostream& os, const SymbolCurve& curve)
{
    os << "theta,re_z,im_z,re_f,im_f\n";
    for (const auto& s : curve.samples) {
        os << format_double(s.theta) << ',' << format_double(s.z.real()) << ',' << format_double(s.z.imag())
           << ',' << format_double(s.f.real()) << ',' << format_double(s.f.imag()) << '\n';
    }
}

void write_transform_csv(std::ostream& os, const TransformSamples& samples)
{
    os << "theta";
    for (Eigen::Index i = 0; i < samples.values.rows(); ++i)
        os << ",re_" << i << ",im_" << i;
    os << '\n';
    for (std::size_t j = 0; j < samples.M(); ++j) {
        os << format_double(samples.theta[j]);
        for (Eigen::Index i = 0; i < samples.values.rows(); ++i) {
            const cplx v = samples.values(i, static_cast<Eigen::Index>(j));
            os << ',' << format_double(v.real()) << ',' << format_double(v.imag());
        }
        os << '\n';
    }
}

TransformSamples read_transform_csv(std::istream& is, double rho)
{
    if (!(rho > 0.0))
        throw FormatError("transform CSV: rho must be positive");
    std::string line;
    if (!std::getline(is, line) || line.rfind("theta", 0) != 0)
        throw FormatError("transform CSV: missing column header");
    const std::size_t cols = split(line).size();
    if (cols < 3 || cols % 2 == 0)
        throw FormatError("transform CSV: expected theta followed by re/im pairs");
    const std::size_t dim = (cols - 1) / 2;

    std::vector<std::vector<cplx>> rows;
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split(line);
        if (fields.size() != cols)
            throw FormatError("transform CSV: wrong number of columns");
        std::vector<cplx> row(dim);
        for (std::size_t i = 0; i < dim; ++i)
            row[i] = {parse_double(fields[1 + 2 * i]), parse_double(fields[2 + 2 * i])};
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw FormatError("transform CSV: no samples");

    // Samples are taken to sit on the uniform grid theta_j = 2 pi j / M.
    TransformSamples s;
    s.rho = rho;
    const std::size_t M = rows.size();
    s.values = Matrix(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(M));
    for (std::size_t j = 0; j < M; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
        s.theta.push_back(theta);
        s.z.push_back(std::polar(rho, theta));
        for (std::size_t i = 0; i < dim; ++i)
            s.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[j][i];
    }
    return s;
}

Matrix parse_matrix(const json& j)
{
    if (!j.is_array() || j.empty())
        throw FormatError("matrix: expected a nonempty array of rows");
    const auto d = static_cast<Eigen::Index>(j.size());
    Matrix A(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
            throw FormatError("matrix: rows must have as many entries as there are rows");
        for (Eigen::Index c = 0; c < d; ++c)
            A(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
    }
    return A;
}

IvpSpec parse_ivp_spec(const json& j)
{
    if (!j.is_object())
        throw FormatError("spec: expected a JSON object");
    for (const char* key : {"kind", "alpha", "x0", "steps"})
        if (!j.contains(key))
            throw FormatError(std::string("spec: missing field '") + key + "'");

    IvpSpec spec;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rl")
        spec.kind = IvpKind::RiemannLiouville;
    else if (kind == "caputo")
        spec.kind = IvpKind::Caputo;
    else if (kind == "gl")
        spec.kind = IvpKind::GrunwaldLetnikov;
    else
        throw FormatError("spec: kind must be rl, caputo or gl");

    if (!j.at("alpha").is_number())
        throw FormatError("spec: alpha must be a number");
    spec.alpha = j.at("alpha").get<double>();

    const auto& x0 = j.at("x0");
    if (!x0.is_array() || x0.empty())
        throw FormatError("spec: x0 must be a nonempty array");
    spec.x0.resize(static_cast<Eigen::Index>(x0.size()));
    for (std::size_t i = 0; i < x0.size(); ++i)
        spec.x0(static_cast<Eigen::Index>(i)) = parse_complex(x0[i]);

    const auto d = static_cast<std::size_t>(spec.x0.size());
    if (j.contains("A") && !j.at("A").is_null()) {
        Matrix A = parse_matrix(j.at("A"));
        if (static_cast<std::size_t>(A.rows()) != d)
            throw FormatError("spec: A and x0 dimensions differ");
        spec.rhs = RightHandSide::linear(std::move(A));
    } else {
        spec.rhs = RightHandSide::zero(d);
    }

    const auto& steps = j.at("steps");
    if (!steps.is_number_integer() || steps.get<long long>() < 1)
        throw FormatError("spec: steps must be a positive integer");
    spec.steps = steps.get<std::size_t>();

    if (j.contains("h")) {
        if (!j.at("h").is_number())
            throw FormatError("spec: h must be a number");
        spec.h = j.at("h").get<double>();
    }
    if (j.contains("rho")) {
        if (!j.at("rho").is_number())
            throw FormatError("spec: rho must be a number");
        spec.rho = j.at("rho").get<double>();
    }
    return spec;
}

json ivp_spec_to_json(const IvpSpec& spec)
{
    json j;
    switch (spec.kind) {
    case IvpKind::RiemannLiouville:
        j["kind"] = "rl";
        break;
    case IvpKind::Caputo:
        j["kind"] = "caputo";
        break;
    case IvpKind::GrunwaldLetnikov:
        j["kind"] = "gl";
        break;
    }
    j["alpha"] = spec.alpha;
    j["x0"] = json::array();
    for (Eigen::Index i = 0; i < spec.x0.size(); ++i)
        j["x0"].push_back(complex_to_json(spec.x0(i)));
    if (const Matrix* A = spec.rhs.matrix()) {
        j["A"] = json::array();
        for (Eigen::Index r = 0; r < A->rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < A->cols(); ++c)
                row.push_back(complex_to_json((*A)(r, c)));
            j["A"].push_back(row);
        }
    } else {
        j["A"] = nullptr;
    }
    j["steps"] = spec.steps;
    j["h"] = spec.h;
    j["rho"] = spec.rho;
    return j;
}

json verdict_to_json(const StabilityVerdict& v)
{
    json j;
    j["classification"] = to_string(v.classification);
    j["lambda"] = complex_to_json(v.lambda);
    if (v.witness_z) {
        j["witness"] = {{"z", complex_to_json(*v.witness_z)}, {"radius", *v.witness_radius}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace fracseq
