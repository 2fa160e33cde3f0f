#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relaysec/box_search.hpp"
#include "relaysec/gaussian_channel.hpp"
#include "relaysec/geometry.hpp"
#include "relaysec/mimome.hpp"

namespace relaysec {

/// Parsed config text: `[section]` headers and `key = value` lines.
/// Comments start with '#'. Unknown sections or keys are parse errors (the
/// schema is closed against typos).
class ConfigDoc {
 public:
  struct Entry {
    std::string value;
    int line = 0;
  };

  bool has_section(const std::string& name) const;
  bool has(const std::string& section, const std::string& key) const;
  const Entry& get(const std::string& section, const std::string& key) const;
  const std::map<std::string, Entry>* section(const std::string& name) const;
  const std::string& origin() const { return origin_; }

  void insert(const std::string& section, const std::string& key, Entry entry);
  void set_origin(std::string origin) { origin_ = std::move(origin); }

 private:
  std::map<std::string, std::map<std::string, Entry>> sections_;
  std::string origin_ = "<config>";
};

ConfigDoc parse_config_text(const std::string& text,
                            const std::string& origin);
ConfigDoc load_config_file(const std::filesystem::path& path);

/// Typed value extraction; throws parse_error with origin/line/field
/// diagnostics.
double config_double(const ConfigDoc& doc, const std::string& section,
                     const std::string& key);
double config_double_or(const ConfigDoc& doc, const std::string& section,
                        const std::string& key, double fallback);
bool config_bool_or(const ConfigDoc& doc, const std::string& section,
                    const std::string& key, bool fallback);
std::uint64_t config_u64_or(const ConfigDoc& doc, const std::string& section,
                            const std::string& key, std::uint64_t fallback);
Eigen::Vector2d config_vec2(const ConfigDoc& doc, const std::string& section,
                            const std::string& key);
Eigen::MatrixXd config_matrix(const ConfigDoc& doc, const std::string& section,
                              const std::string& key);

/// Channel from a `[channel]`/`[powers]`/`[eavesdropper]` config, or from a
/// `[geometry]` section with a `relay` key. Eavesdropper flags default to
/// unset when no `[eavesdropper]` section is present.
GaussianOrthogonalChannel channel_from_config(const ConfigDoc& doc);

/// Whether the config pins the eavesdropper flags explicitly.
bool config_has_eavesdropper_section(const ConfigDoc& doc);

/// Geometry plus the sweep segment and sample count.
struct SweepSpec {
  Geometry geometry;
  Eigen::Vector2d relay_from;
  Eigen::Vector2d relay_to;
  std::size_t samples = 41;
};
SweepSpec sweep_from_config(const ConfigDoc& doc);

MimomeInstance mimome_from_config(const ConfigDoc& doc);

/// Optimizer settings from `[optimizer]` (and, for report round-trips, the
/// `[report]` section), over the given defaults.
SearchConfig search_config_from_config(const ConfigDoc& doc,
                                       SearchConfig defaults);

}  // namespace relaysec
