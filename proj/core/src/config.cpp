#include "pdpolar/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace pdpolar {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw ConfigError(message);
}

// Byte offset -> 1-based line/column, for parse diagnostics.
std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

double require_number(const json& obj, const std::string& key,
                      const std::string& where) {
  if (!obj.contains(key)) fail(where + "." + key + " is required");
  if (!obj.at(key).is_number()) fail(where + "." + key + " must be a number");
  return obj.at(key).get<double>();
}

DegradingMapSpec parse_degrading(const json& channel) {
  DegradingMapSpec spec;
  if (!channel.contains("degrading")) return spec;  // defaults to conjugation
  const json& d = channel.at("degrading");
  const std::string kind = d.value("kind", std::string{"conjugation"});
  if (kind == "conjugation") {
    spec.kind = DegradingKind::conjugation;
  } else if (kind == "parametric") {
    spec.kind = DegradingKind::parametric;
  } else {
    fail("channel.degrading.kind: unknown kind '" + kind + "'");
  }
  spec.delta = d.value("delta", 0.0);
  if (!(spec.delta >= 0.0 && spec.delta <= 1.0))
    fail("channel.degrading.delta out of range [0, 1]");
  return spec;
}

// Cache so a sweep does not re-read the same table file per grid entry.
using TableCache = std::map<std::string, CloningTable>;

ChannelModel parse_channel(const json& channel,
                           const std::filesystem::path& base_dir,
                           TableCache& tables) {
  if (!channel.is_object()) fail("channel must be an object");
  const std::string family = channel.value("family", std::string{});
  const DegradingMapSpec degrading = parse_degrading(channel);
  try {
    if (family == "erasure") {
      const double eps = require_number(channel, "epsilon", "channel");
      if (!(eps >= 0.0 && eps <= 1.0))
        fail("channel.epsilon out of range [0, 1]");
      return ChannelModel::erasure_channel(eps, degrading);
    }
    if (family == "pauli") {
      if (!channel.contains("p") || !channel.at("p").is_array() ||
          channel.at("p").size() != 4)
        fail("channel.p must be an array [p_I, p_X, p_Y, p_Z]");
      PauliProbs p;
      p.p_i = channel.at("p").at(0).get<double>();
      p.p_x = channel.at("p").at(1).get<double>();
      p.p_y = channel.at("p").at(2).get<double>();
      p.p_z = channel.at("p").at(3).get<double>();
      return ChannelModel::pauli_channel(p, degrading);
    }
    if (family == "cloning") {
      if (!channel.contains("N")) fail("channel.N is required for cloning");
      const int n = channel.at("N").get<int>();
      if (!channel.contains("table"))
        fail("channel.table is required for cloning");
      const std::string table_ref = channel.at("table").get<std::string>();
      std::filesystem::path table_path(table_ref);
      if (table_path.is_relative()) table_path = base_dir / table_path;
      auto it = tables.find(table_path.string());
      if (it == tables.end()) {
        try {
          it = tables.emplace(table_path.string(),
                              load_cloning_table(table_path)).first;
        } catch (const std::exception& e) {
          fail(std::string{"channel.table: "} + e.what());
        }
      }
      return ChannelModel::cloning_channel(n, it->second, degrading);
    }
    fail("channel.family: unknown family '" + family + "'");
  } catch (const std::invalid_argument& e) {
    fail(std::string{"channel: "} + e.what());
  }
}

json merge_channel(const json& base, const json& patch) {
  if (!patch.is_object()) fail("sweep.param_grid entries must be objects");
  json merged = base;
  for (const auto& [key, value] : patch.items()) merged[key] = value;
  return merged;
}

RunConfig parse_validated(const json& doc,
                          const std::filesystem::path& base_dir);

}  // namespace

RunConfig parse_config(const std::string& json_text,
                       const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(json_text, e.byte);
    std::ostringstream msg;
    msg << "config parse error at line " << line << ", column " << column
        << ": " << e.what();
    fail(msg.str());
  }
  if (!doc.is_object()) fail("config root must be an object");
  try {
    return parse_validated(doc, base_dir);
  } catch (const json::exception& e) {
    // Wrong-typed fields are config errors, not runtime failures.
    fail(std::string{"config field error: "} + e.what());
  }
}

namespace {

RunConfig parse_validated(const json& doc,
                          const std::filesystem::path& base_dir) {
  RunConfig cfg;
  TableCache tables;

  if (!doc.contains("channel")) fail("channel is required");
  cfg.channel = parse_channel(doc.at("channel"), base_dir, tables);

  if (!doc.contains("geometry")) fail("geometry is required");
  const json& geometry = doc.at("geometry");
  if (!geometry.contains("k")) fail("geometry.k is required");
  cfg.k = geometry.at("k").get<int>();
  if (cfg.k < 1) fail("geometry.k must be >= 1");
  if (cfg.k > kMaxLevels) fail("geometry.k exceeds guard 24");
  cfg.beta = require_number(geometry, "beta", "geometry");
  if (!(cfg.beta > 0.0 && cfg.beta < 0.5))
    fail("geometry.beta out of range (0, 0.5)");

  if (!doc.contains("eta")) fail("eta is required");
  cfg.eta = doc.at("eta").get<double>();
  if (!(cfg.eta > 0.0 && cfg.eta < 1.0)) fail("eta out of range (0, 1)");

  if (doc.contains("mc")) {
    const json& mc = doc.at("mc");
    cfg.mc.enabled = mc.value("enabled", false);
    if (cfg.mc.enabled) {
      if (!mc.contains("seed")) fail("mc.seed required when mc.enabled");
      cfg.mc.seed = mc.at("seed").get<std::uint64_t>();
      cfg.mc.samples = mc.value("samples", std::uint64_t{0});
      if (cfg.mc.samples < 10000) fail("mc.samples below floor 10000");
    }
  }

  if (doc.contains("sweep")) {
    SweepConfig sweep;
    const json& s = doc.at("sweep");
    if (!s.contains("k_list")) {
      sweep.k_list = {5, 10, 15, 20};  // default block-length ladder
    } else {
      if (!s.at("k_list").is_array() || s.at("k_list").empty())
        fail("empty sweep: sweep.k_list must be a non-empty array");
      for (const auto& kv : s.at("k_list")) {
        const int k = kv.get<int>();
        if (k < 1 || k > kMaxLevels)
          fail("sweep.k_list entry out of range [1, 24]");
        sweep.k_list.push_back(k);
      }
    }
    if (!s.contains("param_grid") || !s.at("param_grid").is_array() ||
        s.at("param_grid").empty())
      fail("empty sweep: sweep.param_grid must be a non-empty array");
    for (const auto& patch : s.at("param_grid"))
      sweep.channels.push_back(
          parse_channel(merge_channel(doc.at("channel"), patch), base_dir,
                        tables));
    cfg.sweep = std::move(sweep);
  }

  if (doc.contains("output")) {
    std::filesystem::path out(doc.at("output").get<std::string>());
    if (out.is_relative()) out = base_dir / out;
    cfg.output = out;
  }

  return cfg;
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.has_parent_path()
                                        ? path.parent_path()
                                        : std::filesystem::path{"."});
}

}  // namespace pdpolar
