#pragma once

/**
 * @file operators.hpp
 * @brief Causal fractional operators on weighted sequences.
 *
 * Sequences on N are WeightedSequence values with start() == 0; the
 * embedding into Z is implicit zero extension. Operators on N return their
 * exact region only: an output entry is kept when every input it depends on
 * lies inside the given window.
 */

#include <optional>

#include "fracseq/sequence.hpp"

namespace fracseq {

/// (1 - tau^{-1})^alpha u = c * u with c = make_kernel(alpha, N).
/// N defaults to u.size() - 1, which makes the first u.size() entries exact.
WeightedSequence frac_power(double alpha, const WeightedSequence& u,
                            std::optional<std::size_t> N = std::nullopt);

/// Fractional sum: (nabla^{-alpha} v)_n = sum_{k=0}^n (-1)^k C(-alpha, k) v_{n-k}.
/// Requires alpha > 0 and v on N. Same window as v.
WeightedSequence frac_sum(double alpha, const WeightedSequence& v);

/// chi_N (tau - 1) u: u_{n+1} - u_n for n >= 0, zero for n < 0. Values past
/// the window read as zero, so the last entry carries the window edge.
WeightedSequence forward_difference(const WeightedSequence& u);

/// Riemann-Liouville difference Delta (nabla^{-(1-alpha)} v), alpha in (0, 1).
/// Returns indices 0 .. v.size() - 2.
WeightedSequence rl_delta(double alpha, const WeightedSequence& v);

/// Caputo difference nabla^{-(1-alpha)} (Delta v), alpha in (0, 1).
/// Returns indices 0 .. v.size() - 2.
WeightedSequence caputo_delta(double alpha, const WeightedSequence& v);

/// Grunwald-Letnikov difference on the grid hN:
/// h^{-alpha} sum_{k=0}^{n} (-1)^k C(alpha, k) v_{n-k}. Entry n stands for t = n h.
WeightedSequence gl_delta(double alpha, double h, const WeightedSequence& v);

}  // namespace fracseq
