#include "pdpolar/verify.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <vector>

#include "pdpolar/ber.hpp"
#include "pdpolar/channel.hpp"
#include "pdpolar/codesets.hpp"
#include "pdpolar/pipeline.hpp"
#include "pdpolar/polarize.hpp"
#include "pdpolar/rates.hpp"

namespace pdpolar {

namespace {

struct Verifier {
  std::ostream& out;
  bool all_ok = true;

  void check(const char* name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
    all_ok = all_ok && ok;
  }
};

IndexSet random_subset(std::size_t n, std::mt19937_64& eng, double density) {
  IndexSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (static_cast<double>(eng() >> 11) * 0x1.0p-53 < density) s.insert(i);
  return s;
}

bool polarization_recursion_ok() {
  const CodeGeometry g2(2, 0.3);
  const auto t = polarize_exact(0.5, g2);
  const std::vector<double> expected{0.9375, 0.5625, 0.4375, 0.0625};
  if (t.values != expected) return false;
  for (int k = 1; k <= 12; ++k) {
    const CodeGeometry g(k, 0.3);
    for (int b = 0; b <= 10; ++b) {
      const double base = b / 10.0;
      if (std::abs(table_mean(polarize_exact(base, g)) - base) > 1e-9)
        return false;
    }
  }
  return true;
}

bool classification_partition_ok() {
  std::mt19937_64 eng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 3 + static_cast<int>(eng() % 6);
    const CodeGeometry g(k, 0.3);
    const double base = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    const auto table = polarize_exact(base, g);
    const IndexSet good = classify_good(table);
    if (good.count() + good.complement().count() != g.n) return false;
  }
  return true;
}

bool set_identities_ok() {
  std::mt19937_64 eng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 4u << (eng() % 5);  // 4..64
    const IndexSet good_amp = random_subset(n, eng, 0.5);
    const IndexSet good_phase = random_subset(n, eng, 0.4);
    const IndexSet good_phase_deg =
        good_phase | random_subset(n, eng, 0.3);
    const auto p = build_partition(good_amp, good_phase, good_phase_deg);
    if (!check_identities(p).all_asserted_hold()) return false;
    if (p.info_pd.count() != p.m() + p.delta()) return false;

    // Per-index enumeration, no set algebra.
    for (std::size_t i = 0; i < n; ++i) {
      const bool a = good_amp.contains(i);
      const bool e = good_phase.contains(i);
      const bool d = good_phase_deg.contains(i);
      if (p.amp_only.contains(i) != (a && !e)) return false;
      if (p.phase_only.contains(i) != (!a && e)) return false;
      if (p.info_degr.contains(i) != (a && e)) return false;
      if (p.info_pd.contains(i) != (a && d)) return false;
      if (p.amp_promoted.contains(i) != (a && !e && d)) return false;
      if (p.both_bad.contains(i) != (!a && !e)) return false;
    }
  }
  return true;
}

bool conjugation_equivalence_ok() {
  const DegradingMapSpec conj{DegradingKind::conjugation, 0.0};
  const std::vector<ChannelModel> models = {
      ChannelModel::erasure_channel(0.5, conj),
      ChannelModel::pauli_channel({0.85, 0.05, 0.02, 0.08}, conj),
  };
  for (const auto& model : models) {
    const BaseParams bp = base_params(model);
    const CodeGeometry g(8, 0.3);
    const auto amp = polarize_exact(bp.z_amp, g);
    const auto phase = polarize_exact(bp.z_phase, g);
    const auto phase_deg = polarize_exact(bp.z_phase_degraded, g);
    const auto p = build_partition(classify_good(amp), classify_good(phase),
                                   classify_good(phase_deg));
    if (p.delta() != 0) return false;
    if (rate_pd(p) != rate_degradable(p)) return false;
  }
  return true;
}

bool rate_monotonicity_ok() {
  std::mt19937_64 eng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const double u1 = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    const double delta = 0.05 + 0.95 * u2;
    // Alternate between symmetric erasure and asymmetric Pauli models;
    // the latter populate the promoted set so the strict case is hit.
    const auto model =
        (trial % 2 == 0)
            ? ChannelModel::erasure_channel(0.1 + 0.8 * u1,
                                            {DegradingKind::parametric, delta})
            : ChannelModel::pauli_channel(
                  {0.93 - 0.25 * u1, 0.02 + 0.05 * u1, 0.0, 0.05 + 0.2 * u1},
                  {DegradingKind::parametric, delta});
    const BaseParams bp = base_params(model);
    const CodeGeometry g(8, 0.3);
    const auto p = build_partition(
        classify_good(polarize_exact(bp.z_amp, g)),
        classify_good(polarize_exact(bp.z_phase, g)),
        classify_good(polarize_exact(bp.z_phase_degraded, g)));
    const double degr = rate_degradable(p);
    const double pd = rate_pd(p);
    if (pd < degr) return false;
    if (p.delta() > 0 && !(pd > degr)) return false;
    if (p.delta() == 0 && pd != degr) return false;
  }
  return true;
}

bool ber_bounds_ok() {
  std::mt19937_64 eng(53);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + eng() % 32;
    std::vector<double> f(n);
    for (auto& x : f) x = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    IndexSet info(n);
    for (std::size_t i = 0; i < n; ++i)
      if (eng() & 1) info.insert(i);
    const double lower = ber_lower_bound(f, info).value;
    const double eta =
        0.001 + 0.998 * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
    const double upper = ber_upper_bound(f, eta).value;
    if (!(lower >= 0.0 && lower <= 0.5)) return false;
    if (!(upper >= 0.0 && upper <= 0.5)) return false;
  }
  const std::vector<double> spot{0.36};
  if (std::abs(ber_lower_bound(spot, IndexSet::full(1)).value - 0.1) > 1e-12)
    return false;
  const std::vector<double> pair{0.04, 0.05};
  if (std::abs(ber_upper_bound(pair, 0.1).value - 0.35) > 1e-12) return false;
  return true;
}

bool mc_determinism_ok() {
  const CodeGeometry g(6, 0.3);
  const auto a = polarize_mc(0.4, g, 20000, 99);
  const auto b = polarize_mc(0.4, g, 20000, 99);
  if (a.values != b.values) return false;
  const auto exact = polarize_exact(0.4, g);
  for (std::size_t i = 0; i < g.n; ++i)
    if (std::abs(a.values[i] - exact.values[i]) > 0.05) return false;
  return true;
}

bool genie_union_bound_ok() {
  const CodeGeometry g(6, 0.3);
  const auto table = polarize_exact(0.5, g);
  const IndexSet info = classify_good(table);
  const std::uint64_t samples = 20000;
  const double estimate = genie_sc_block_error(table, info, samples, 4242);
  double bound = 0.0;
  info.for_each([&](std::size_t i) { bound += table.values[i]; });
  const double sigma = std::sqrt(0.25 / static_cast<double>(samples));
  return estimate <= bound + 3.0 * sigma;
}

}  // namespace

bool run_verify(std::ostream& out) {
  Verifier v{out};
  v.check("polarization_recursion", polarization_recursion_ok());
  v.check("classification_partition", classification_partition_ok());
  v.check("set_identities", set_identities_ok());
  v.check("conjugation_equivalence", conjugation_equivalence_ok());
  v.check("rate_monotonicity", rate_monotonicity_ok());
  v.check("ber_bounds", ber_bounds_ok());
  v.check("mc_determinism", mc_determinism_ok());
  v.check("genie_union_bound", genie_union_bound_ok());
  out << (v.all_ok ? "verify: all checks passed\n"
                   : "verify: FAILURES detected\n");
  return v.all_ok;
}

}  // namespace pdpolar
