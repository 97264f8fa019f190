#include "pdpolar/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pdpolar {

namespace {

constexpr double kPauliSumTolerance = 1e-12;

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

// Binary symmetric channel with flip probability p.
double bsc_bhattacharyya(double p) {
  return std::clamp(2.0 * std::sqrt(p * (1.0 - p)), 0.0, 1.0);
}

}  // namespace

ChannelModel ChannelModel::erasure_channel(double epsilon,
                                           DegradingMapSpec d) {
  ChannelModel m;
  m.family = ChannelFamily::erasure;
  m.epsilon = epsilon;
  m.degrading = d;
  m.validate();
  return m;
}

ChannelModel ChannelModel::pauli_channel(PauliProbs p, DegradingMapSpec d) {
  ChannelModel m;
  m.family = ChannelFamily::pauli;
  m.pauli = p;
  m.degrading = d;
  m.validate();
  return m;
}

ChannelModel ChannelModel::cloning_channel(int n, CloningTable table,
                                           DegradingMapSpec d) {
  ChannelModel m;
  m.family = ChannelFamily::cloning;
  m.cloning_n = n;
  m.cloning_table = std::move(table);
  m.degrading = d;
  m.validate();
  return m;
}

void ChannelModel::validate() const {
  if (!in_unit_interval(degrading.delta))
    throw std::invalid_argument("invalid channel parameters: degrading delta");
  switch (family) {
    case ChannelFamily::erasure:
      if (!in_unit_interval(epsilon))
        throw std::invalid_argument("invalid channel parameters: epsilon");
      break;
    case ChannelFamily::pauli: {
      const double sum = pauli.p_i + pauli.p_x + pauli.p_y + pauli.p_z;
      const bool nonneg = pauli.p_i >= 0.0 && pauli.p_x >= 0.0 &&
                          pauli.p_y >= 0.0 && pauli.p_z >= 0.0;
      if (!nonneg || std::abs(sum - 1.0) > kPauliSumTolerance)
        throw std::invalid_argument(
            "invalid channel parameters: pauli probabilities");
      break;
    }
    case ChannelFamily::cloning:
      if (cloning_n < 1)
        throw std::invalid_argument("invalid channel parameters: cloning N");
      break;
  }
}

double apply_degrading(double z_phase, const DegradingMapSpec& spec) {
  if (spec.kind == DegradingKind::conjugation) return z_phase;
  return std::clamp(z_phase * (1.0 - spec.delta), 0.0, 1.0);
}

BaseParams base_params(const ChannelModel& model) {
  model.validate();
  BaseParams out;
  switch (model.family) {
    case ChannelFamily::erasure:
      out.z_amp = model.epsilon;
      out.z_phase = model.epsilon;
      out.z_phase_degraded = apply_degrading(out.z_phase, model.degrading);
      break;
    case ChannelFamily::pauli: {
      const double p_amp = model.pauli.p_x + model.pauli.p_y;
      const double p_phase = model.pauli.p_z + model.pauli.p_y;
      out.z_amp = bsc_bhattacharyya(p_amp);
      out.z_phase = bsc_bhattacharyya(p_phase);
      out.z_phase_degraded = apply_degrading(out.z_phase, model.degrading);
      break;
    }
    case ChannelFamily::cloning: {
      const auto it = model.cloning_table.find(model.cloning_n);
      if (it == model.cloning_table.end())
        throw std::invalid_argument("unknown cloning parameter");
      // The table owns the per-N degrading strength; the model only
      // selects between conjugation and the parametric map.
      DegradingMapSpec effective{model.degrading.kind, it->second.delta};
      out.z_amp = it->second.z_amp;
      out.z_phase = it->second.z_phase;
      out.z_phase_degraded = apply_degrading(out.z_phase, effective);
      break;
    }
  }
  return out;
}

double effective_delta(const ChannelModel& model) {
  if (model.degrading.kind == DegradingKind::conjugation) return 0.0;
  if (model.family == ChannelFamily::cloning) {
    const auto it = model.cloning_table.find(model.cloning_n);
    return it == model.cloning_table.end() ? 0.0 : it->second.delta;
  }
  return model.degrading.delta;
}

std::string family_name(ChannelFamily family) {
  switch (family) {
    case ChannelFamily::erasure:
      return "erasure";
    case ChannelFamily::pauli:
      return "pauli";
    case ChannelFamily::cloning:
      return "cloning";
  }
  return "unknown";
}

CloningTable parse_cloning_table(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text);
  if (!doc.is_object())
    throw std::invalid_argument("cloning table must be a JSON object");
  CloningTable table;
  for (const auto& [key, value] : doc.items()) {
    int n = 0;
    try {
      std::size_t pos = 0;
      n = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("cloning table key is not an integer: " +
                                  key);
    }
    if (n < 1)
      throw std::invalid_argument("cloning table key must be >= 1: " + key);
    CloningEntry entry;
    entry.z_amp = value.at("z_amp").get<double>();
    entry.z_phase = value.at("z_phase_E").get<double>();
    entry.delta = value.at("delta").get<double>();
    if (!in_unit_interval(entry.z_amp) || !in_unit_interval(entry.z_phase) ||
        !in_unit_interval(entry.delta))
      throw std::invalid_argument("cloning table entry out of [0, 1] for N=" +
                                  key);
    table.emplace(n, entry);
  }
  return table;
}

CloningTable load_cloning_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open cloning table: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cloning_table(buffer.str());
}

}  // namespace pdpolar
