#pragma once

/**
 * @file io.hpp
 * @brief File formats: sequence CSV, symbol-curve CSV, transform CSV,
 *        IvpSpec JSON and stability verdict JSON.
 *
 * Floats are written with 17 significant digits through std::to_chars, so
 * output is locale independent and round-trips exactly.
 *
 * Sequence CSV:
 *     # rho=<rho>,dim=<d>
 *     index,re_0,im_0,...,re_{d-1},im_{d-1}
 *     <k>,<re>,<im>,...
 */

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fracseq/solver.hpp"
#include "fracseq/stability.hpp"
#include "fracseq/ztransform.hpp"

namespace fracseq {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v);

void write_sequence_csv(std::ostream& os, const WeightedSequence& x);
/// Same layout, but the index column holds t = n h (Grunwald-Letnikov grids).
void write_grid_csv(std::ostream& os, const WeightedSequence& x, double h);
WeightedSequence read_sequence_csv(std::istream& is);

/// theta,re_z,im_z,re_f,im_f
void write_curve_csv(std::ostream& os, const SymbolCurve& curve);

/// theta,re_0,im_0,... per sample
void write_transform_csv(std::ostream& os, const TransformSamples& samples);

/// Reads samples written by write_transform_csv; the sample grid is the
/// uniform one, theta_j = 2 pi j / M.
TransformSamples read_transform_csv(std::istream& is, double rho);

/// {"kind": "rl"|"caputo"|"gl", "alpha": a, "x0": [[re, im], ...],
///  "A": [[[re, im], ...], ...] | null, "steps": n, "h": h}
/// "h" is optional (default 1); "rho" is an optional extension (default 2).
IvpSpec parse_ivp_spec(const nlohmann::json& j);
nlohmann::json ivp_spec_to_json(const IvpSpec& spec);

/// [[[re, im], ...], ...]
Matrix parse_matrix(const nlohmann::json& j);

nlohmann::json verdict_to_json(const StabilityVerdict& v);

}  // namespace fracseq
