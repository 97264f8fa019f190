#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pdpolar/index_set.hpp"
#include "pdpolar/polarize.hpp"

namespace pdpolar {

// A bound value together with the raw fidelity sum that produced it.
// Sums feeding the square root are clamped to [0, 1] and bound outputs
// to [0, 0.5]; the raw sum is kept so nothing is hidden by the clamp.
struct BerBound {
  double value = 0.0;
  double raw_sum = 0.0;
};

// Lower bound (1/2)(1 - sqrt(1 - S)) with S the fidelity sum over the
// information set.
BerBound ber_lower_bound(std::span<const double> fidelities,
                         const IndexSet& info_set);

// A(eta) = { i : F_i <= eta }. Requires 0 < eta < 1, otherwise throws
// std::invalid_argument("invalid threshold").
IndexSet threshold_set(std::span<const double> fidelities, double eta);

// Upper bound (1/2)(1 - sqrt(S)) with S the fidelity sum over A(eta).
BerBound ber_upper_bound(std::span<const double> fidelities, double eta);

// Genie-aided successive-cancellation oracle on the erasure surrogate:
// simulates block transmissions with i.i.d. erasures at the table's base
// parameter, propagates the indicators through the polar butterfly, and
// counts a block error whenever any information-set index is erased at
// its decoding step. Deterministic given the seed; per-block randomness
// derives from (seed, block index), so serial and chunked execution
// agree. Requires an erasure_exact table ("oracle requires erasure mode")
// and samples >= 10000 ("insufficient samples").
double genie_sc_block_error(const SyntheticTable& table,
                            const IndexSet& info_set, std::uint64_t samples,
                            std::uint64_t seed);

// Same transmissions evaluated against several information sets at once;
// entry j equals genie_sc_block_error(table, info_sets[j], samples, seed).
std::vector<double> genie_sc_block_error_multi(
    const SyntheticTable& table, std::span<const IndexSet> info_sets,
    std::uint64_t samples, std::uint64_t seed);

struct McSettings {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct BerEstimate {
  double lower = 0.0;
  double upper = 0.0;
  double lower_raw_sum = 0.0;
  double upper_raw_sum = 0.0;
  // The two bounds are structurally unrelated formulas and may cross;
  // flagged rather than hidden.
  bool bounds_crossed = false;
  double eta = 0.0;
  IndexSet a_eta;
  std::optional<double> mc_estimate;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 0;
};

// Assembles the full estimate for one analysis: bounds from the table
// values plus the optional Monte Carlo oracle over the information set.
BerEstimate evaluate_ber(const SyntheticTable& amp_table,
                         const IndexSet& info_set, double eta,
                         const std::optional<McSettings>& mc);

}  // namespace pdpolar
