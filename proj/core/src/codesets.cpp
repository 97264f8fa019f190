#include "pdpolar/codesets.hpp"

#include <sstream>
#include <stdexcept>

namespace pdpolar {

std::size_t CodeSetPartition::frozen_count() const {
  return amp_frozen().count() + phase_frozen().count() + both_bad.count();
}

CodeSetPartition build_partition(const IndexSet& good_amp,
                                 const IndexSet& good_phase,
                                 const IndexSet& good_phase_deg) {
  const std::size_t n = good_amp.universe();
  if (n == 0 || good_phase.universe() != n || good_phase_deg.universe() != n)
    throw std::invalid_argument("inconsistent PD classification");
  if (!good_phase.is_subset_of(good_phase_deg))
    throw std::invalid_argument("inconsistent PD classification");

  CodeSetPartition p;
  p.n = n;
  p.good_amp = good_amp;
  p.good_phase = good_phase;
  p.good_phase_deg = good_phase_deg;

  p.amp_only = good_amp - good_phase;
  p.phase_only = good_phase - good_amp;
  p.info_degr = good_amp & good_phase;
  p.info_pd = good_amp & good_phase_deg;
  p.amp_promoted = p.amp_only & good_phase_deg;
  // The degraded-environment pass reclassifies the phase view only; the
  // amplitude view is the same in both analyses, so no phase_only index
  // can become information-bearing.
  p.phase_promoted = IndexSet(n);
  p.both_bad = good_amp.complement() & good_phase.complement();
  return p;
}

namespace {

void add_check(IdentityReport& report, std::string name, bool holds,
               bool asserted, std::string detail = {}) {
  report.checks.push_back(
      {std::move(name), holds, asserted, std::move(detail)});
}

}  // namespace

IdentityReport check_identities(const CodeSetPartition& p) {
  IdentityReport report;

  const IndexSet amp_frozen = p.amp_frozen();
  const IndexSet phase_frozen = p.phase_frozen();

  report.counts = SetCounts{
      p.n,
      p.good_amp.count(),
      p.good_phase.count(),
      p.good_phase_deg.count(),
      p.amp_only.count(),
      p.phase_only.count(),
      p.amp_promoted.count(),
      p.phase_promoted.count(),
      p.info_degr.count(),
      p.info_pd.count(),
      p.both_bad.count(),
      amp_frozen.count(),
      phase_frozen.count(),
  };
  const IndexSet bad_amp = p.good_amp.complement();
  const IndexSet s_bad = p.info_pd.complement();

  add_check(report, "promoted_sets_disjoint",
            (p.amp_promoted | p.phase_promoted).count() ==
                p.amp_promoted.count() + p.phase_promoted.count(),
            true);

  add_check(report, "phase_frozen_within_amp_bad",
            phase_frozen.is_subset_of(bad_amp), true);

  add_check(report, "phase_frozen_avoids_pd_info_and_bad",
            !phase_frozen.intersects(p.info_pd | p.both_bad), true);

  add_check(report, "pd_info_avoids_both_bad",
            !p.info_pd.intersects(p.both_bad), true);

  add_check(report, "amp_frozen_avoids_pd_info_and_bad",
            !amp_frozen.intersects(p.info_pd | p.both_bad), true);

  add_check(report, "amp_frozen_avoids_pd_info_and_phase_frozen",
            !amp_frozen.intersects(p.info_pd | phase_frozen), true);

  // The five codeword classes are pairwise disjoint, so both union forms
  // must have cardinality equal to the sum of their parts and agree.
  const IndexSet union_classes = p.info_degr | p.amp_promoted |
                                 p.phase_promoted | amp_frozen | phase_frozen;
  const IndexSet union_pd_form = p.info_pd | amp_frozen | phase_frozen;
  const std::size_t class_sum = p.info_degr.count() + p.amp_promoted.count() +
                                p.phase_promoted.count() + amp_frozen.count() +
                                phase_frozen.count();
  const std::size_t pd_form_sum =
      p.info_pd.count() + amp_frozen.count() + phase_frozen.count();
  add_check(report, "codeword_classes_disjoint",
            union_classes.count() == class_sum &&
                union_pd_form.count() == pd_form_sum &&
                union_classes == union_pd_form,
            true);

  add_check(report, "pd_info_additivity",
            p.info_pd.count() == p.m() + p.delta(), true);

  add_check(report, "good_bad_complete",
            p.info_pd.count() + s_bad.count() == p.n, true);

  add_check(report, "frozen_count_consistent",
            p.n - p.info_pd.count() == p.frozen_count(), true);

  // Finite-n diagnostics: these only settle asymptotically and are
  // reported without being required.
  add_check(report, "promoted_within_amp_good",
            (p.amp_promoted | p.phase_promoted).is_subset_of(p.good_amp),
            false);
  add_check(report, "frozen_within_amp_good",
            (amp_frozen | phase_frozen).is_subset_of(p.good_amp), false);

  report.reduction_residual =
      union_pd_form.count() - (p.info_pd | amp_frozen).count();

  return report;
}

bool IdentityReport::all_asserted_hold() const {
  for (const auto& c : checks)
    if (c.asserted && !c.holds) return false;
  return true;
}

std::string IdentityReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks)
    out << (c.holds ? "pass " : "FAIL ") << c.name
        << (c.asserted ? "" : " (reported)") << '\n';
  out << "reduction residual: " << reduction_residual << '\n';
  out << "counts: n=" << counts.n << " G_amp=" << counts.good_amp
      << " G_phase=" << counts.good_phase
      << " G_phase_deg=" << counts.good_phase_deg
      << " amp_only=" << counts.amp_only
      << " phase_only=" << counts.phase_only
      << " promoted=" << counts.amp_promoted
      << " info_degr=" << counts.info_degr << " info_pd=" << counts.info_pd
      << " both_bad=" << counts.both_bad
      << " amp_frozen=" << counts.amp_frozen
      << " phase_frozen=" << counts.phase_frozen << '\n';
  return out.str();
}

}  // namespace pdpolar
