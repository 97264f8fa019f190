// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own runtime budget.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pdpolar/ber.hpp"
#include "pdpolar/channel.hpp"
#include "pdpolar/codesets.hpp"
#include "pdpolar/pipeline.hpp"
#include "pdpolar/polarize.hpp"
#include "pdpolar/rates.hpp"
#include "test_helpers.hpp"

using namespace pdpolar;

namespace {

int failures = 0;
std::string detail;

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) {                                                         \
      detail += std::string("    expectation failed: ") + #cond + " (" +  \
                __FILE__ + ":" + std::to_string(__LINE__) + ")\n";         \
      return false;                                                        \
    }                                                                      \
  } while (0)

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

void report(const char* name, bool ok, double seconds, double budget,
            const std::string& note = {}) {
  const bool in_budget = seconds < budget;
  const bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::printf("[%s] %-28s %6.2fs (budget %gs)%s%s\n", pass ? "PASS" : "FAIL",
              name, seconds, budget, note.empty() ? "" : " ",
              note.c_str());
  if (!ok && !detail.empty()) std::fputs(detail.c_str(), stdout);
  if (ok && !in_budget)
    std::printf("    runtime budget exceeded\n");
  detail.clear();
}

CodeSetPartition partition_for(const BaseParams& bp, int k, double beta) {
  const CodeGeometry g(k, beta);
  const auto amp = polarize_exact(bp.z_amp, g);
  const auto phase = polarize_exact(bp.z_phase, g);
  const auto phase_deg = bp.z_phase_degraded == bp.z_phase
                             ? phase
                             : polarize_exact(bp.z_phase_degraded, g);
  return build_partition(classify_good(amp), classify_good(phase),
                         classify_good(phase_deg));
}

// 1. Conjugation leaves the code identical to the degradable one: no
//    promoted indices and exactly equal rates, for every built-in family.
bool conjugation_equivalence() {
  const DegradingMapSpec conj{DegradingKind::conjugation, 0.0};
  const CloningTable table = parse_cloning_table(R"({
    "2": {"z_amp": 0.5, "z_phase_E": 0.75, "delta": 0.2}
  })");
  const std::vector<ChannelModel> models = {
      ChannelModel::erasure_channel(0.5, conj),
      ChannelModel::pauli_channel({0.80, 0.04, 0.01, 0.15}, conj),
      ChannelModel::cloning_channel(2, table, conj),
  };
  for (const auto& model : models) {
    const auto p = partition_for(base_params(model), 10, 0.3);
    EXPECT(p.delta() == 0);
    EXPECT(rate_pd(p) == rate_degradable(p));
    EXPECT(p.info_pd == p.info_degr);
  }
  return true;
}

// 2. The PD rate never drops below the degradable rate, strictly above it
//    whenever any index was promoted. 200 randomized erasure configs.
bool pd_rate_monotonicity() {
  std::mt19937_64 eng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const double eps = 0.1 + 0.8 * test_helpers::unit_draw(eng);
    const double delta =
        std::nextafter(0.0, 1.0) + test_helpers::unit_draw(eng);
    const auto model = ChannelModel::erasure_channel(
        eps, {DegradingKind::parametric, std::min(delta, 1.0)});
    const auto p = partition_for(base_params(model), 10, 0.3);
    const double degr = rate_degradable(p);
    const double pd = rate_pd(p);
    EXPECT(pd >= degr);
    if (p.delta() > 0) EXPECT(pd > degr);
    if (p.delta() == 0) EXPECT(pd == degr);
  }
  return true;
}

// 3. Set-identity suite over 10^4 randomized partitions (n <= 64), each
//    cross-checked against a brute-force membership enumeration.
bool set_identity_suite() {
  std::mt19937_64 eng(3);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 4u << (eng() % 5);  // 4..64
    const auto in = test_helpers::random_inputs(n, eng);
    const auto p =
        build_partition(in.good_amp, in.good_phase, in.good_phase_deg);

    const IdentityReport report = check_identities(p);
    EXPECT(report.all_asserted_hold());
    EXPECT(p.info_pd.count() == p.m() + p.delta());
    EXPECT(p.info_pd.count() + p.info_pd.complement().count() == n);

    const auto expected = test_helpers::brute_force_partition(in);
    EXPECT(p.amp_only.to_indices() == expected.amp_only);
    EXPECT(p.phase_only.to_indices() == expected.phase_only);
    EXPECT(p.info_degr.to_indices() == expected.info_degr);
    EXPECT(p.info_pd.to_indices() == expected.info_pd);
    EXPECT(p.amp_promoted.to_indices() == expected.amp_promoted);
    EXPECT(p.both_bad.to_indices() == expected.both_bad);
    EXPECT(p.amp_frozen().to_indices() == expected.amp_frozen);
    EXPECT(p.phase_frozen().to_indices() == expected.phase_frozen);
  }
  return true;
}

// 4. Polarization oracle: frozen k=2 table, exact, plus conservation of
//    the base parameter for k <= 16.
bool polarization_oracle() {
  const auto k2 = polarize_exact(0.5, CodeGeometry(2, 0.3));
  EXPECT(k2.values == (std::vector<double>{0.9375, 0.5625, 0.4375, 0.0625}));
  for (int k = 1; k <= 16; ++k) {
    for (int b = 0; b <= 10; ++b) {
      const double base = b / 10.0;
      const auto t = polarize_exact(base, CodeGeometry(k, 0.3));
      EXPECT(std::abs(table_mean(t) - base) <= 1e-9);
    }
  }
  return true;
}

// 5. Deeper polarization shrinks both the doubly-bad fraction and the
//    unpolarized band (erasure 0.5, conjugation, k=8 vs k=16).
bool asymptotic_trend() {
  const auto model = ChannelModel::erasure_channel(
      0.5, {DegradingKind::conjugation, 0.0});
  const BaseParams bp = base_params(model);
  double ent[2], band[2];
  const int ks[2] = {8, 16};
  for (int i = 0; i < 2; ++i) {
    const auto p = partition_for(bp, ks[i], 0.3);
    ent[i] = entanglement_consumption(p);
    band[i] =
        unpolarized_fraction(polarize_exact(bp.z_amp, CodeGeometry(ks[i], 0.3)));
  }
  EXPECT(ent[1] < ent[0]);
  EXPECT(band[1] < band[0]);
  return true;
}

// 6. Bound spot values at 1e-12 plus range confinement under fuzzing.
bool ber_bound_spot_values() {
  const std::vector<double> spot{0.36};
  EXPECT(std::abs(ber_lower_bound(spot, IndexSet::full(1)).value - 0.1) <=
         1e-12);
  const std::vector<double> pair{0.04, 0.05};
  EXPECT(std::abs(ber_upper_bound(pair, 0.1).value - 0.35) <= 1e-12);

  std::mt19937_64 eng(6);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + eng() % 32;
    std::vector<double> f(n);
    for (auto& x : f) x = test_helpers::unit_draw(eng);
    IndexSet info(n);
    for (std::size_t i = 0; i < n; ++i)
      if (eng() & 1) info.insert(i);
    const double lo = ber_lower_bound(f, info).value;
    const double up =
        ber_upper_bound(f, 0.001 + 0.998 * test_helpers::unit_draw(eng)).value;
    EXPECT(lo >= 0.0 && lo <= 0.5);
    EXPECT(up >= 0.0 && up <= 0.5);
  }
  return true;
}

// 7. Monte Carlo oracles agree with the exact recursion: the genie SC
//    estimate within 3 sigma of the synthesized erasure probability, and
//    seed-averaged density evolution within 0.02 entrywise at k <= 8.
bool mc_oracle_agreement() {
  const auto k2 = polarize_exact(0.5, CodeGeometry(2, 0.3));
  const std::uint64_t samples = 100000;
  const double estimate =
      genie_sc_block_error(k2, IndexSet::of(4, {3}), samples, 4711);
  const double expected = 0.0625;
  const double sigma =
      std::sqrt(expected * (1.0 - expected) / static_cast<double>(samples));
  EXPECT(std::abs(estimate - expected) <= 3.0 * sigma);

  for (const int k : {4, 6, 8}) {
    const CodeGeometry g(k, 0.3);
    const auto exact = polarize_exact(0.5, g);
    std::vector<double> mean(g.n, 0.0);
    const int seeds = 5;
    for (int s = 0; s < seeds; ++s) {
      const auto mc = polarize_mc(0.5, g, 100000, 100 + s);
      for (std::size_t i = 0; i < g.n; ++i) mean[i] += mc.values[i] / seeds;
    }
    for (std::size_t i = 0; i < g.n; ++i)
      EXPECT(std::abs(mean[i] - exact.values[i]) <= 0.02);
  }
  return true;
}

// 8. Sweep shape on the default cloning table: block-error estimates grow
//    with the information-set size at fixed k, never grow with k at fixed
//    rate targets, and the sweep CSV is identical between serial and
//    concurrent execution (wall-clock ms column excluded).
bool sweep_shape(std::string& note) {
  const CloningTable table = load_cloning_table(
      std::string(PDPOLAR_CONFIG_DIR) + "/cloning_table_default.json");
  const std::vector<int> ks{5, 10, 15};
  const std::vector<double> target_fractions{0.25, 0.5};
  const std::uint64_t samples = 20000;

  for (const auto& [n_clones, entry] : table) {
    const double z = entry.z_amp;
    const double capacity = 1.0 - z;
    std::vector<std::vector<double>> at_targets(target_fractions.size());

    for (const int k : ks) {
      const CodeGeometry g(k, 0.3);
      const auto amp = polarize_exact(z, g);

      std::vector<std::size_t> order(g.n);
      for (std::size_t i = 0; i < g.n; ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) {
                         return amp.values[a] < amp.values[b];
                       });

      // Nested information sets: a rate grid for the fixed-k curve plus
      // the shared fixed-rate targets for the cross-k comparison.
      std::vector<std::size_t> sizes;
      for (const double f : {0.1, 0.2, 0.3, 0.4, 0.5})
        sizes.push_back(std::max<std::size_t>(
            1, static_cast<std::size_t>(
                   std::ceil(f * capacity * static_cast<double>(g.n)))));
      std::vector<std::size_t> target_sizes;
      for (const double f : target_fractions)
        target_sizes.push_back(std::max<std::size_t>(
            1, static_cast<std::size_t>(
                   std::ceil(f * capacity * static_cast<double>(g.n)))));

      auto make_sets = [&](const std::vector<std::size_t>& ms) {
        std::vector<IndexSet> sets;
        for (const std::size_t m : ms) {
          IndexSet s(g.n);
          for (std::size_t i = 0; i < m && i < g.n; ++i) s.insert(order[i]);
          sets.push_back(std::move(s));
        }
        return sets;
      };

      // One batch over the same transmissions covers both the rate grid
      // and the fixed-rate targets.
      auto all_sizes = sizes;
      all_sizes.insert(all_sizes.end(), target_sizes.begin(),
                       target_sizes.end());
      const auto sets = make_sets(all_sizes);
      const auto est = genie_sc_block_error_multi(amp, sets, samples, 88001);
      for (std::size_t i = 1; i < sizes.size(); ++i)
        EXPECT(est[i] >= est[i - 1]);
      for (std::size_t t = 0; t < target_sizes.size(); ++t)
        at_targets[t].push_back(est[sizes.size() + t]);
    }

    for (const auto& series : at_targets)
      for (std::size_t i = 1; i < series.size(); ++i)
        EXPECT(series[i] <= series[i - 1]);
  }

  // CSV determinism: serial vs concurrent execution of the same sweep.
  std::ostringstream cfg_text;
  cfg_text << R"({
    "channel": {"family": "cloning", "N": 1,
                "table": "cloning_table_default.json",
                "degrading": {"kind": "conjugation"}},
    "geometry": {"k": 10, "beta": 0.3},
    "eta": 0.5,
    "mc": {"enabled": true, "samples": 10000, "seed": 424242},
    "sweep": {"k_list": [5, 10],
              "param_grid": [{"N": 1}, {"N": 2}, {"N": 3}, {"N": 5},
                              {"N": 8}, {"N": 12}, {"N": 24}]}
  })";
  const RunConfig cfg =
      parse_config(cfg_text.str(), std::string(PDPOLAR_CONFIG_DIR));
  const auto serial = run_sweep(cfg, SweepExecution::serial);
  const auto parallel = run_sweep(cfg, SweepExecution::parallel);

  auto csv_without_ms = [](const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    emit_csv(rows, out);
    std::istringstream in(out.str());
    std::ostringstream stripped;
    std::string line;
    while (std::getline(in, line))
      stripped << line.substr(0, line.rfind(',')) << '\n';
    return stripped.str();
  };
  EXPECT(csv_without_ms(serial) == csv_without_ms(parallel));
  note = "(csv compared with wall-clock ms column excluded)";
  return true;
}

// 9. Performance guard: a single k=20 exact-mode analysis stays under
//    10 s and the process high-water mark under 512 MB.
bool performance_guard(std::string& note) {
  const char* text = R"({
    "channel": {"family": "erasure", "epsilon": 0.5,
                "degrading": {"kind": "parametric", "delta": 0.3}},
    "geometry": {"k": 20, "beta": 0.3},
    "eta": 0.5
  })";
  const auto start = std::chrono::steady_clock::now();
  const ResultRow row = run_analyze(parse_config(text, "."));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  EXPECT(row.n == 1048576);
  EXPECT(seconds < 10.0);

  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  const double peak_mb = static_cast<double>(usage.ru_maxrss) / 1024.0;
  EXPECT(peak_mb < 512.0);

  std::ostringstream n;
  n << "(" << seconds << " s, peak rss " << peak_mb << " MB)";
  note = n.str();
  return true;
}

template <typename F>
void run_criterion(const char* name, double budget, F&& f) {
  const double start = now_seconds();
  const bool ok = f();
  report(name, ok, now_seconds() - start, budget);
}

}  // namespace

int main() {
  run_criterion("conjugation_equivalence", 1.0, conjugation_equivalence);
  run_criterion("pd_rate_monotonicity", 30.0, pd_rate_monotonicity);
  run_criterion("set_identity_suite", 30.0, set_identity_suite);
  run_criterion("polarization_oracle", 10.0, polarization_oracle);
  run_criterion("asymptotic_trend", 10.0, asymptotic_trend);
  run_criterion("ber_bound_spot_values", 5.0, ber_bound_spot_values);
  run_criterion("mc_oracle_agreement", 60.0, mc_oracle_agreement);

  {
    const double start = now_seconds();
    std::string note;
    const bool ok = sweep_shape(note);
    report("sweep_shape", ok, now_seconds() - start, 120.0, note);
  }
  {
    const double start = now_seconds();
    std::string note;
    const bool ok = performance_guard(note);
    report("performance_guard", ok, now_seconds() - start, 15.0, note);
  }

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
