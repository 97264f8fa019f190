#include "pdpolar/ber.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "mc_sampling.hpp"

namespace pdpolar {

namespace {

constexpr std::uint64_t kOracleSampleFloor = 10000;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double half_one_minus_sqrt(double s) {
  return std::clamp(0.5 * (1.0 - std::sqrt(s)), 0.0, 0.5);
}

}  // namespace

BerBound ber_lower_bound(std::span<const double> fidelities,
                         const IndexSet& info_set) {
  if (info_set.universe() != fidelities.size())
    throw std::invalid_argument("information set does not match table size");
  double sum = 0.0;
  info_set.for_each([&](std::size_t i) { sum += fidelities[i]; });
  return {half_one_minus_sqrt(1.0 - clamp01(sum)), sum};
}

IndexSet threshold_set(std::span<const double> fidelities, double eta) {
  if (!(eta > 0.0 && eta < 1.0))
    throw std::invalid_argument("invalid threshold");
  IndexSet a(fidelities.size());
  for (std::size_t i = 0; i < fidelities.size(); ++i)
    if (fidelities[i] <= eta) a.insert(i);
  return a;
}

BerBound ber_upper_bound(std::span<const double> fidelities, double eta) {
  const IndexSet a = threshold_set(fidelities, eta);
  double sum = 0.0;
  a.for_each([&](std::size_t i) { sum += fidelities[i]; });
  return {half_one_minus_sqrt(clamp01(sum)), sum};
}

std::vector<double> genie_sc_block_error_multi(
    const SyntheticTable& table, std::span<const IndexSet> info_sets,
    std::uint64_t samples, std::uint64_t seed) {
  if (table.mode != TableMode::erasure_exact)
    throw std::invalid_argument("oracle requires erasure mode");
  if (samples < kOracleSampleFloor)
    throw std::invalid_argument("insufficient samples");
  const std::size_t n = table.geometry.n;
  for (const auto& s : info_sets)
    if (s.universe() != n)
      throw std::invalid_argument("information set does not match table size");

  std::vector<std::uint64_t> errors(info_sets.size(), 0);
  std::vector<std::uint64_t> words(n), scratch(n);
  const std::uint64_t n_blocks = (samples + 63) / 64;
  for (std::uint64_t block = 0; block < n_blocks; ++block) {
    std::mt19937_64 eng(detail::block_seed(seed, block));
    for (std::size_t i = 0; i < n; ++i)
      words[i] = detail::bernoulli_word(eng, table.base);
    detail::propagate_indicators(words, scratch);
    const std::uint64_t mask = detail::tail_mask(samples, block, n_blocks);
    for (std::size_t s = 0; s < info_sets.size(); ++s) {
      // A block fails when any information index is erased at its step.
      std::uint64_t failed = 0;
      info_sets[s].for_each([&](std::size_t i) { failed |= words[i]; });
      errors[s] += static_cast<std::uint64_t>(std::popcount(failed & mask));
    }
  }

  std::vector<double> out(info_sets.size());
  for (std::size_t s = 0; s < info_sets.size(); ++s)
    out[s] =
        static_cast<double>(errors[s]) / static_cast<double>(samples);
  return out;
}

double genie_sc_block_error(const SyntheticTable& table,
                            const IndexSet& info_set, std::uint64_t samples,
                            std::uint64_t seed) {
  const IndexSet sets[] = {info_set};
  return genie_sc_block_error_multi(table, sets, samples, seed)[0];
}

BerEstimate evaluate_ber(const SyntheticTable& amp_table,
                         const IndexSet& info_set, double eta,
                         const std::optional<McSettings>& mc) {
  BerEstimate est;
  est.eta = eta;
  const auto lower = ber_lower_bound(amp_table.values, info_set);
  const auto upper = ber_upper_bound(amp_table.values, eta);
  est.lower = lower.value;
  est.lower_raw_sum = lower.raw_sum;
  est.upper = upper.value;
  est.upper_raw_sum = upper.raw_sum;
  est.bounds_crossed = est.upper < est.lower;
  est.a_eta = threshold_set(amp_table.values, eta);
  if (mc) {
    est.mc_estimate =
        genie_sc_block_error(amp_table, info_set, mc->samples, mc->seed);
    est.mc_samples = mc->samples;
    est.seed = mc->seed;
  }
  return est;
}

}  // namespace pdpolar
