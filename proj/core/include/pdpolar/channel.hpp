#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace pdpolar {

enum class ChannelFamily { erasure, pauli, cloning };

enum class DegradingKind { conjugation, parametric };

// How the degraded environment view E' is obtained from the environment
// view E. Conjugation leaves the effective phase parameter untouched;
// the parametric map contracts it by a factor (1 - delta).
struct DegradingMapSpec {
  DegradingKind kind = DegradingKind::conjugation;
  double delta = 0.0;  // in [0, 1]; ignored for conjugation
};

struct PauliProbs {
  double p_i = 1.0;
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;
};

// Per-N parameters for the 1->N cloning family. These come from a
// user-supplied table; the library ships illustrative defaults only.
struct CloningEntry {
  double z_amp = 0.0;
  double z_phase = 0.0;  // phase parameter analyzed against E
  double delta = 0.0;    // degrading strength used by the parametric map
};

using CloningTable = std::map<int, CloningEntry>;

// Parses a JSON object mapping N (as a text key) to
// {"z_amp": x, "z_phase_E": y, "delta": d}, all in [0, 1].
CloningTable load_cloning_table(const std::filesystem::path& path);
CloningTable parse_cloning_table(const std::string& json_text);

struct ChannelModel {
  ChannelFamily family = ChannelFamily::erasure;
  double epsilon = 0.0;      // erasure
  PauliProbs pauli;          // pauli
  int cloning_n = 1;         // cloning
  CloningTable cloning_table;
  DegradingMapSpec degrading;

  static ChannelModel erasure_channel(double epsilon, DegradingMapSpec d);
  static ChannelModel pauli_channel(PauliProbs p, DegradingMapSpec d);
  static ChannelModel cloning_channel(int n, CloningTable table,
                                      DegradingMapSpec d);

  // Throws std::invalid_argument("invalid channel parameters") when the
  // family parameters are out of range.
  void validate() const;
};

// The three base fidelity parameters seeding polarization: amplitude,
// phase analyzed against the environment E, and phase analyzed against
// the degraded environment E'. Always z_phase_degraded <= z_phase.
struct BaseParams {
  double z_amp = 0.0;
  double z_phase = 0.0;
  double z_phase_degraded = 0.0;
};

// Conjugation returns z unchanged; the parametric map returns
// z * (1 - delta), clamped to [0, 1].
double apply_degrading(double z_phase, const DegradingMapSpec& spec);

// Reduces a channel model to its base parameter triple.
//
// erasure: both views equal epsilon.
// pauli:   amplitude flip probability p_x + p_y and phase flip
//          probability p_z + p_y, each mapped through 2*sqrt(p(1-p)).
// cloning: looked up from the table; the table's per-N delta drives the
//          parametric map, conjugation ignores it.
BaseParams base_params(const ChannelModel& model);

// Degrading strength actually in effect for a model (0 for conjugation;
// the table's delta for parametric cloning).
double effective_delta(const ChannelModel& model);

// Short lowercase family name, as used in config files and CSV output.
std::string family_name(ChannelFamily family);

}  // namespace pdpolar
