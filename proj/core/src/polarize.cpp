#include "pdpolar/polarize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "mc_sampling.hpp"

namespace pdpolar {

namespace {

constexpr std::uint64_t kMcSampleFloor = 1000;
constexpr int kMaxSupportedLevels = 30;  // table allocation guard

void require_base(double base) {
  if (!(base >= 0.0 && base <= 1.0))
    throw std::invalid_argument("base parameter out of [0, 1]");
}

// True iff sqrt(F) < 2^{-n^beta}, evaluated as log2(F)/2 < -n^beta so the
// comparison survives thresholds below the double underflow limit.
bool is_good(double fidelity, double n_pow_beta) {
  if (fidelity == 0.0) return true;
  return 0.5 * std::log2(fidelity) < -n_pow_beta;
}

}  // namespace

CodeGeometry::CodeGeometry(int k_levels, double beta_exp)
    : k(k_levels), n(0), beta(beta_exp) {
  if (k_levels < 1 || k_levels > kMaxSupportedLevels)
    throw std::invalid_argument("polarization level k out of supported range");
  if (!(beta_exp > 0.0 && beta_exp < 0.5))
    throw std::invalid_argument("beta out of range (0, 0.5)");
  n = std::size_t{1} << k_levels;
}

SyntheticTable polarize_exact(double base, const CodeGeometry& geometry) {
  require_base(base);
  SyntheticTable table{geometry, base, TableMode::erasure_exact, 0, {}};
  auto& v = table.values;
  v.assign(geometry.n, 0.0);
  v[0] = base;
  // Expand in place, doubling the populated prefix once per level;
  // iterating j downward never reads an already-overwritten slot.
  for (std::size_t size = 1; size < geometry.n; size <<= 1) {
    for (std::size_t j = size; j-- > 0;) {
      const double e = v[j];
      v[2 * j] = std::clamp(e * (2.0 - e), 0.0, 1.0);
      v[2 * j + 1] = e * e;
    }
  }
  return table;
}

SyntheticTable polarize_mc(double base, const CodeGeometry& geometry,
                           std::uint64_t samples, std::uint64_t seed) {
  require_base(base);
  if (samples < kMcSampleFloor)
    throw std::invalid_argument("insufficient samples");
  const std::size_t n = geometry.n;
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<std::uint64_t> words(n), scratch(n);
  const std::uint64_t n_blocks = (samples + 63) / 64;
  for (std::uint64_t block = 0; block < n_blocks; ++block) {
    std::mt19937_64 eng(detail::block_seed(seed, block));
    for (std::size_t i = 0; i < n; ++i)
      words[i] = detail::bernoulli_word(eng, base);
    detail::propagate_indicators(words, scratch);
    const std::uint64_t mask = detail::tail_mask(samples, block, n_blocks);
    for (std::size_t i = 0; i < n; ++i)
      counts[i] += static_cast<std::uint64_t>(std::popcount(words[i] & mask));
  }
  SyntheticTable table{geometry, base, TableMode::mc_density_evolution,
                       samples, {}};
  table.values.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    table.values[i] =
        static_cast<double>(counts[i]) / static_cast<double>(samples);
  return table;
}

double classification_threshold(std::size_t n, double beta) {
  return std::exp2(-std::pow(static_cast<double>(n), beta));
}

IndexSet classify_good(const SyntheticTable& table) {
  const double n_pow_beta =
      std::pow(static_cast<double>(table.geometry.n), table.geometry.beta);
  IndexSet good(table.geometry.n);
  for (std::size_t i = 0; i < table.values.size(); ++i)
    if (is_good(table.values[i], n_pow_beta)) good.insert(i);
  return good;
}

double unpolarized_fraction(const SyntheticTable& table) {
  const double n_pow_beta =
      std::pow(static_cast<double>(table.geometry.n), table.geometry.beta);
  const double threshold =
      classification_threshold(table.geometry.n, table.geometry.beta);
  std::size_t band = 0;
  for (const double f : table.values) {
    if (is_good(f, n_pow_beta)) continue;
    if (std::sqrt(f) >= 1.0 - threshold) continue;  // firmly bad
    ++band;
  }
  return static_cast<double>(band) / static_cast<double>(table.geometry.n);
}

double table_mean(const SyntheticTable& table) {
  // Kahan summation: the conservation check at large n needs more
  // accuracy than a naive accumulate guarantees.
  double sum = 0.0, carry = 0.0;
  for (const double v : table.values) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(table.values.size());
}

}  // namespace pdpolar
