#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdpolar/config.hpp"

namespace pdpolar {

// One flat record per analyzed (channel, k) cell.
struct ResultRow {
  std::string family;
  double param1 = 0.0;
  double param2 = 0.0;
  double delta_map = 0.0;
  int k = 0;
  std::size_t n = 0;
  double beta = 0.0;
  double eta = 0.0;

  std::size_t size_g_amp = 0;
  std::size_t size_g_phase = 0;
  std::size_t size_g_phase_deg = 0;
  std::size_t size_amp_only = 0;
  std::size_t size_phase_only = 0;
  std::size_t size_amp_promoted = 0;
  std::size_t size_phase_promoted = 0;
  std::size_t size_info_degr = 0;
  std::size_t size_info_pd = 0;
  std::size_t size_both_bad = 0;
  std::size_t delta = 0;

  double rq_degr = 0.0;
  double rq_pd = 0.0;
  double chi_ab = 0.0;
  double chi_ae = 0.0;
  double chi_ae_deg = 0.0;
  double ent_consumption = 0.0;
  double unpolarized = 0.0;
  double ber_lower = 0.0;
  double ber_upper = 0.0;
  std::optional<double> ber_mc;

  std::int64_t wall_ms = 0;
};

// Exact CSV header emitted by emit_csv.
extern const char* const kCsvHeader;

// Full pipeline for a single cell: base parameters -> polarization ->
// classification -> set partition -> rates -> BER. Deterministic given
// the configured seed (wall_ms excepted).
ResultRow run_analyze(const RunConfig& config);

enum class SweepExecution { serial, parallel };

// Cartesian product of param_grid (outer) and k_list (inner), one row per
// cell, emitted in grid order regardless of execution strategy. A failing
// cell aborts the sweep with an error naming the cell.
std::vector<ResultRow> run_sweep(const RunConfig& config,
                                 SweepExecution execution);

// Writes the exact header plus one line per row; reals carry 9
// significant digits, the ber_mc field is empty when the oracle did not
// run, and the file ends with a newline.
void emit_csv(std::span<const ResultRow> rows, std::ostream& out);
void emit_csv(std::span<const ResultRow> rows,
              const std::filesystem::path& path);

// Renders a real the way emit_csv does (9 significant digits).
std::string format_real(double value);

}  // namespace pdpolar
