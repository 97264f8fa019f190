#include "pdpolar/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

#include "pdpolar/ber.hpp"
#include "pdpolar/codesets.hpp"
#include "pdpolar/polarize.hpp"
#include "pdpolar/rates.hpp"

namespace pdpolar {

const char* const kCsvHeader =
    "family,param1,param2,delta_map,k,n,beta,eta,size_G_amp,size_G_phase_E,"
    "size_G_phase_Ep,size_P1,size_P2,size_P1p,size_P2p,size_Sin_degr,"
    "size_Sin_pd,size_B_both,delta,rq_degr,rq_pd,chi_ab,chi_ae,chi_aep,"
    "ent_consumption,unpolarized,ber_lower,ber_upper,ber_mc,ms";

namespace {

void family_params(const ChannelModel& ch, double& param1, double& param2) {
  switch (ch.family) {
    case ChannelFamily::erasure:
      param1 = ch.epsilon;
      param2 = 0.0;
      break;
    case ChannelFamily::pauli:
      param1 = ch.pauli.p_x + ch.pauli.p_y;
      param2 = ch.pauli.p_z + ch.pauli.p_y;
      break;
    case ChannelFamily::cloning: {
      param1 = static_cast<double>(ch.cloning_n);
      const auto it = ch.cloning_table.find(ch.cloning_n);
      param2 = it == ch.cloning_table.end() ? 0.0 : it->second.z_amp;
      break;
    }
  }
}

ResultRow run_cell(const ChannelModel& channel, int k, double beta,
                   double eta, const McConfig& mc) {
  const auto start = std::chrono::steady_clock::now();

  BaseParams bp;
  try {
    bp = base_params(channel);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string{"channel: "} + e.what());
  }
  const CodeGeometry geometry(k, beta);

  const SyntheticTable amp = polarize_exact(bp.z_amp, geometry);
  const SyntheticTable phase = polarize_exact(bp.z_phase, geometry);
  // Conjugation leaves the phase parameter untouched; reuse the table so
  // the two classifications are identical by construction.
  const SyntheticTable phase_deg =
      bp.z_phase_degraded == bp.z_phase
          ? phase
          : polarize_exact(bp.z_phase_degraded, geometry);

  const CodeSetPartition partition = build_partition(
      classify_good(amp), classify_good(phase), classify_good(phase_deg));
  const RateReport rates =
      build_rate_report(partition, unpolarized_fraction(amp));

  std::optional<McSettings> mc_settings;
  if (mc.enabled) mc_settings = McSettings{mc.samples, mc.seed};
  const BerEstimate ber =
      evaluate_ber(amp, partition.info_pd, eta, mc_settings);

  ResultRow row;
  row.family = family_name(channel.family);
  family_params(channel, row.param1, row.param2);
  row.delta_map = effective_delta(channel);
  row.k = k;
  row.n = geometry.n;
  row.beta = beta;
  row.eta = eta;
  row.size_g_amp = partition.good_amp.count();
  row.size_g_phase = partition.good_phase.count();
  row.size_g_phase_deg = partition.good_phase_deg.count();
  row.size_amp_only = partition.amp_only.count();
  row.size_phase_only = partition.phase_only.count();
  row.size_amp_promoted = partition.amp_promoted.count();
  row.size_phase_promoted = partition.phase_promoted.count();
  row.size_info_degr = partition.info_degr.count();
  row.size_info_pd = partition.info_pd.count();
  row.size_both_bad = partition.both_bad.count();
  row.delta = partition.delta();
  row.rq_degr = rates.rq_degr;
  row.rq_pd = rates.rq_pd;
  row.chi_ab = rates.chi_ab;
  row.chi_ae = rates.chi_ae;
  row.chi_ae_deg = rates.chi_ae_deg;
  row.ent_consumption = rates.ent_consumption;
  row.unpolarized = rates.unpolarized_fraction;
  row.ber_lower = ber.lower;
  row.ber_upper = ber.upper;
  row.ber_mc = ber.mc_estimate;

  const auto end = std::chrono::steady_clock::now();
  row.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
          .count();
  return row;
}

}  // namespace

ResultRow run_analyze(const RunConfig& config) {
  if (config.sweep)
    throw ConfigError("analyze config must not contain sweep");
  return run_cell(config.channel, config.k, config.beta, config.eta,
                  config.mc);
}

std::vector<ResultRow> run_sweep(const RunConfig& config,
                                 SweepExecution execution) {
  if (!config.sweep) throw ConfigError("empty sweep: sweep section missing");
  const SweepConfig& sweep = *config.sweep;

  struct Cell {
    std::size_t grid = 0;
    int k = 0;
  };
  std::vector<Cell> cells;
  for (std::size_t g = 0; g < sweep.channels.size(); ++g)
    for (const int k : sweep.k_list) cells.push_back({g, k});

  auto run_one = [&](const Cell& cell) {
    try {
      return run_cell(sweep.channels[cell.grid], cell.k, config.beta,
                      config.eta, config.mc);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "sweep cell (grid=" << cell.grid << ", k=" << cell.k
          << "): " << e.what();
      throw std::runtime_error(msg.str());
    }
  };

  std::vector<ResultRow> rows(cells.size());
  if (execution == SweepExecution::serial) {
    for (std::size_t i = 0; i < cells.size(); ++i) rows[i] = run_one(cells[i]);
    return rows;
  }

  // Independent cells, merged back in grid order.
  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < cells.size(); begin += workers) {
    const std::size_t end = std::min(cells.size(), begin + workers);
    std::vector<std::future<ResultRow>> futures;
    futures.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i)
      futures.push_back(std::async(std::launch::async, run_one, cells[i]));
    for (std::size_t i = begin; i < end; ++i)
      rows[i] = futures[i - begin].get();
  }
  return rows;
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

void emit_csv(std::span<const ResultRow> rows, std::ostream& out) {
  if (rows.empty())
    throw std::invalid_argument("emit_csv requires at least one row");
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << r.family << ',' << format_real(r.param1) << ','
        << format_real(r.param2) << ',' << format_real(r.delta_map) << ','
        << r.k << ',' << r.n << ',' << format_real(r.beta) << ','
        << format_real(r.eta) << ',' << r.size_g_amp << ',' << r.size_g_phase
        << ',' << r.size_g_phase_deg << ',' << r.size_amp_only << ','
        << r.size_phase_only << ',' << r.size_amp_promoted << ','
        << r.size_phase_promoted << ',' << r.size_info_degr << ','
        << r.size_info_pd << ',' << r.size_both_bad << ',' << r.delta << ','
        << format_real(r.rq_degr) << ',' << format_real(r.rq_pd) << ','
        << format_real(r.chi_ab) << ',' << format_real(r.chi_ae) << ','
        << format_real(r.chi_ae_deg) << ','
        << format_real(r.ent_consumption) << ','
        << format_real(r.unpolarized) << ',' << format_real(r.ber_lower)
        << ',' << format_real(r.ber_upper) << ',';
    if (r.ber_mc) out << format_real(*r.ber_mc);
    out << ',' << r.wall_ms << '\n';
  }
}

void emit_csv(std::span<const ResultRow> rows,
              const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write CSV: " + path.string());
  emit_csv(rows, out);
  out.flush();
  if (!out)
    throw std::runtime_error("failed writing CSV: " + path.string());
}

}  // namespace pdpolar
