#pragma once

#include <cstddef>

#include "pdpolar/codesets.hpp"

namespace pdpolar {

// Set-size Holevo proxies: chi_ab for the main channel, chi_ae for the
// environment view, chi_ae_deg for the degraded environment view.
// chi_ae_deg_amp_only is the reduced form that drops the phase-frozen
// term (it matches chi_ae_deg exactly when the phase classes vanish).
struct HolevoProxies {
  double chi_ab = 0.0;
  double chi_ae = 0.0;
  double chi_ae_deg = 0.0;
  double chi_ae_deg_amp_only = 0.0;
};

// Finite-n rate estimates at the configured block length. All quantities
// are plain set fractions; no asymptotic extrapolation.
struct RateReport {
  std::size_t n = 0;
  double rq_degr = 0.0;          // |info_degr| / n
  double rq_pd = 0.0;            // |info_pd| / n = rq_degr + delta/n
  double chi_ab = 0.0;
  double chi_ae = 0.0;
  double chi_ae_deg = 0.0;
  double ent_consumption = 0.0;  // |both_bad| / n
  double unpolarized_fraction = 0.0;
};

double rate_degradable(const CodeSetPartition& p);
double rate_pd(const CodeSetPartition& p);
HolevoProxies holevo_proxies(const CodeSetPartition& p);
double entanglement_consumption(const CodeSetPartition& p);

// rq_pd against the difference form (|good_amp| - |amp_frozen|) / n.
// The residual is zero whenever the phase-only classes are empty (and,
// with this construction, identically); it is reported, not enforced.
struct CapacityIdentity {
  double rq_pd = 0.0;
  double difference_form = 0.0;
  double residual = 0.0;
  bool forced_exact = false;  // true when phase_frozen and phase_promoted are empty
};

CapacityIdentity capacity_identity(const RateReport& report,
                                   const CodeSetPartition& p);

RateReport build_rate_report(const CodeSetPartition& p,
                             double unpolarized_fraction);

}  // namespace pdpolar
