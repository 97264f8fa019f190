#include "pdpolar/rates.hpp"

#include <cmath>

namespace pdpolar {

namespace {

double fraction(std::size_t count, std::size_t n) {
  return static_cast<double>(count) / static_cast<double>(n);
}

}  // namespace

double rate_degradable(const CodeSetPartition& p) {
  return fraction(p.info_degr.count(), p.n);
}

double rate_pd(const CodeSetPartition& p) {
  return fraction(p.info_pd.count(), p.n);
}

HolevoProxies holevo_proxies(const CodeSetPartition& p) {
  HolevoProxies h;
  h.chi_ab = fraction((p.good_amp | p.phase_promoted).count(), p.n);
  h.chi_ae = fraction(p.amp_only.count() + p.phase_only.count(), p.n);
  h.chi_ae_deg =
      fraction(p.amp_frozen().count() + p.phase_frozen().count(), p.n);
  h.chi_ae_deg_amp_only = fraction(p.amp_frozen().count(), p.n);
  return h;
}

double entanglement_consumption(const CodeSetPartition& p) {
  return fraction(p.both_bad.count(), p.n);
}

CapacityIdentity capacity_identity(const RateReport& report,
                                   const CodeSetPartition& p) {
  CapacityIdentity id;
  id.rq_pd = report.rq_pd;
  id.difference_form =
      fraction(p.good_amp.count() - p.amp_frozen().count(), p.n);
  id.residual = std::abs(id.rq_pd - id.difference_form);
  id.forced_exact = p.phase_frozen().empty() && p.phase_promoted.empty();
  return id;
}

RateReport build_rate_report(const CodeSetPartition& p,
                             double unpolarized_fraction) {
  RateReport r;
  r.n = p.n;
  r.rq_degr = rate_degradable(p);
  r.rq_pd = rate_pd(p);
  const HolevoProxies h = holevo_proxies(p);
  r.chi_ab = h.chi_ab;
  r.chi_ae = h.chi_ae;
  r.chi_ae_deg = h.chi_ae_deg;
  r.ent_consumption = entanglement_consumption(p);
  r.unpolarized_fraction = unpolarized_fraction;
  return r;
}

}  // namespace pdpolar
