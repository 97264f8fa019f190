#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdpolar/channel.hpp"

namespace pdpolar {

// Invalid or malformed run configuration; the CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct McConfig {
  bool enabled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct SweepConfig {
  std::vector<int> k_list;
  std::vector<ChannelModel> channels;  // resolved channel per grid entry
};

// Run configuration, loaded from JSON. Top-level keys: "channel",
// "geometry", "eta", "mc" (optional), "sweep" (optional), "output"
// (optional). Cloning table paths resolve relative to the config file.
struct RunConfig {
  ChannelModel channel;
  int k = 1;
  double beta = 0.3;
  double eta = 0.5;
  McConfig mc;
  std::optional<SweepConfig> sweep;
  std::optional<std::filesystem::path> output;
};

// k values accepted by the CLI; n = 2^24 tables are the largest a single
// cell may allocate.
inline constexpr int kMaxLevels = 24;

RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& json_text,
                       const std::filesystem::path& base_dir);

}  // namespace pdpolar
