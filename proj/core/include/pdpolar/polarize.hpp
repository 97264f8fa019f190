#pragma once

#include <cstdint>
#include <vector>

#include "pdpolar/index_set.hpp"

namespace pdpolar {

// k polarization levels over a block of n = 2^k channel uses, classified
// with exponent beta in (0, 0.5).
struct CodeGeometry {
  int k = 1;
  std::size_t n = 2;
  double beta = 0.3;

  CodeGeometry(int k_levels, double beta_exp);
};

enum class TableMode { erasure_exact, mc_density_evolution };

// Per-index synthesized fidelity parameters after k levels, one table per
// sub-channel view.
struct SyntheticTable {
  CodeGeometry geometry;
  double base = 0.0;
  TableMode mode = TableMode::erasure_exact;
  std::uint64_t mc_samples = 0;  // 0 in exact mode
  std::vector<double> values;    // length n, entries in [0, 1]
};

// Exact recursion on the erasure surrogate: one level maps e to the pair
// (2e - e^2, e^2). Index bits read most-significant-first select the
// transform per level (0 = minus, 1 = plus), i.e. values[2j] and
// values[2j+1] descend from values[j] of the previous level.
SyntheticTable polarize_exact(double base, const CodeGeometry& geometry);

// Monte Carlo density evolution over the same transform tree. Each sample
// draws i.i.d. erasure indicators for the n channel uses and propagates
// them through the butterfly (minus = or, plus = and); values are the
// per-index erased fractions. Deterministic given the seed; sample blocks
// draw their randomness from (seed, block index).
SyntheticTable polarize_mc(double base, const CodeGeometry& geometry,
                           std::uint64_t samples, std::uint64_t seed);

// 2^{-n^beta}
double classification_threshold(std::size_t n, double beta);

// Good set G = { i : sqrt(values[i]) < 2^{-n^beta} }; the complement is
// the bad set. Evaluated in log space so deep-polarization values below
// the subnormal range still classify correctly.
IndexSet classify_good(const SyntheticTable& table);

// Fraction of indices that are neither good nor firmly bad
// (sqrt(F) >= 1 - threshold): the finite-n middle band.
double unpolarized_fraction(const SyntheticTable& table);

// Compensated mean of the table values (the conservation invariant ties
// it to the base parameter in exact mode).
double table_mean(const SyntheticTable& table);

}  // namespace pdpolar
