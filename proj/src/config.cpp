#include "relaysec/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "relaysec/errors.hpp"

namespace relaysec {

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"channel", {"h_sr", "h_sd", "h_rd", "h_se1", "h_se2", "h_re"}},
      {"powers", {"p_r", "p_d", "p_2"}},
      {"eavesdropper", {"channel1", "channel2"}},
      {"geometry",
       {"source", "destination", "eavesdropper", "relay", "relay_from",
        "relay_to", "samples", "alpha"}},
      {"optimizer",
       {"grid", "restarts", "seed", "step_floor", "max_iterations"}},
      {"mimome", {"h", "h_e", "s"}},
      // Sections written by reports; accepted so a report file can be fed
      // straight back in as a config.
      {"report", {"command", "seed", "grid", "restarts", "cases"}},
      {"case1",
       {"pdf_inner", "nf_inner", "genie_outer", "wiretap_baseline",
        "no_secrecy_capacity", "nf_note"}},
      {"case2",
       {"pdf_inner", "nf_inner", "genie_outer", "wiretap_baseline",
        "no_secrecy_capacity", "nf_note"}},
      {"case3",
       {"pdf_inner", "nf_inner", "genie_outer", "wiretap_baseline",
        "no_secrecy_capacity", "nf_note"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& what) {
  throw parse_error(origin + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const ConfigDoc& doc, const std::string& section,
                    const std::string& key, const ConfigDoc::Entry& e) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(e.value, &pos);
    if (pos != e.value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    fail(doc.origin(), e.line,
         "field [" + section + "] " + key + ": expected a number, got '" +
             e.value + "'");
  }
}

}  // namespace

bool ConfigDoc::has_section(const std::string& name) const {
  return sections_.count(name) != 0;
}

bool ConfigDoc::has(const std::string& section, const std::string& key) const {
  auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) != 0;
}

const ConfigDoc::Entry& ConfigDoc::get(const std::string& section,
                                       const std::string& key) const {
  auto it = sections_.find(section);
  if (it == sections_.end() || it->second.count(key) == 0) {
    throw parse_error(origin_ + ": missing required field [" + section +
                      "] " + key);
  }
  return it->second.at(key);
}

const std::map<std::string, ConfigDoc::Entry>* ConfigDoc::section(
    const std::string& name) const {
  auto it = sections_.find(name);
  return it == sections_.end() ? nullptr : &it->second;
}

void ConfigDoc::insert(const std::string& section, const std::string& key,
                       Entry entry) {
  sections_[section][key] = std::move(entry);
}

ConfigDoc parse_config_text(const std::string& text,
                            const std::string& origin) {
  ConfigDoc doc;
  doc.set_origin(origin);
  std::istringstream in(text);
  std::string raw;
  std::string current;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']' || s.size() < 3) {
        fail(origin, line, "malformed section header '" + s + "'");
      }
      current = trim(s.substr(1, s.size() - 2));
      if (schema().count(current) == 0) {
        fail(origin, line, "unknown section [" + current + "]");
      }
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      fail(origin, line, "expected 'key = value', got '" + s + "'");
    }
    if (current.empty()) {
      fail(origin, line, "key outside of any section");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty()) {
      fail(origin, line, "empty key or value");
    }
    const auto& allowed = schema().at(current);
    if (allowed.count(key) == 0) {
      fail(origin, line, "unknown key '" + key + "' in section [" + current +
                             "]");
    }
    if (doc.has(current, key)) {
      fail(origin, line, "duplicate key '" + key + "' in section [" +
                             current + "]");
    }
    doc.insert(current, key, ConfigDoc::Entry{value, line});
  }
  return doc;
}

ConfigDoc load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open config file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path.string());
}

double config_double(const ConfigDoc& doc, const std::string& section,
                     const std::string& key) {
  return parse_double(doc, section, key, doc.get(section, key));
}

double config_double_or(const ConfigDoc& doc, const std::string& section,
                        const std::string& key, double fallback) {
  if (!doc.has(section, key)) return fallback;
  return config_double(doc, section, key);
}

bool config_bool_or(const ConfigDoc& doc, const std::string& section,
                    const std::string& key, bool fallback) {
  if (!doc.has(section, key)) return fallback;
  const auto& e = doc.get(section, key);
  if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no") return false;
  fail(doc.origin(), e.line,
       "field [" + section + "] " + key + ": expected a boolean, got '" +
           e.value + "'");
}

std::uint64_t config_u64_or(const ConfigDoc& doc, const std::string& section,
                            const std::string& key, std::uint64_t fallback) {
  if (!doc.has(section, key)) return fallback;
  const auto& e = doc.get(section, key);
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(e.value, &pos);
    if (pos != e.value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    fail(doc.origin(), e.line,
         "field [" + section + "] " + key +
             ": expected a non-negative integer, got '" + e.value + "'");
  }
}

Eigen::Vector2d config_vec2(const ConfigDoc& doc, const std::string& section,
                            const std::string& key) {
  const auto& e = doc.get(section, key);
  std::istringstream in(e.value);
  double x = 0.0, y = 0.0;
  if (!(in >> x >> y) || !(in >> std::ws).eof()) {
    fail(doc.origin(), e.line,
         "field [" + section + "] " + key + ": expected 'x y', got '" +
             e.value + "'");
  }
  return {x, y};
}

Eigen::MatrixXd config_matrix(const ConfigDoc& doc, const std::string& section,
                              const std::string& key) {
  const auto& e = doc.get(section, key);
  std::vector<std::vector<double>> rows;
  std::istringstream row_in(e.value);
  std::string row_text;
  while (std::getline(row_in, row_text, ';')) {
    std::istringstream cell_in(row_text);
    std::vector<double> row;
    double v = 0.0;
    while (cell_in >> v) row.push_back(v);
    if (!cell_in.eof() || row.empty()) {
      fail(doc.origin(), e.line,
           "field [" + section + "] " + key +
               ": expected ';'-separated numeric rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    fail(doc.origin(), e.line, "field [" + section + "] " + key + ": empty");
  }
  const std::size_t cols = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) {
      fail(doc.origin(), e.line,
           "field [" + section + "] " + key + ": ragged matrix rows");
    }
  }
  Eigen::MatrixXd m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
  return m;
}

bool config_has_eavesdropper_section(const ConfigDoc& doc) {
  return doc.has_section("eavesdropper");
}

GaussianOrthogonalChannel channel_from_config(const ConfigDoc& doc) {
  GaussianOrthogonalChannel ch;
  if (doc.has_section("channel")) {
    ch.h_sr = config_double_or(doc, "channel", "h_sr", 0.0);
    ch.h_sd = config_double_or(doc, "channel", "h_sd", 0.0);
    ch.h_rd = config_double_or(doc, "channel", "h_rd", 0.0);
    ch.h_se1 = config_double_or(doc, "channel", "h_se1", 0.0);
    ch.h_se2 = config_double_or(doc, "channel", "h_se2", 0.0);
    ch.h_re = config_double_or(doc, "channel", "h_re", 0.0);
  } else if (doc.has_section("geometry") && doc.has("geometry", "relay")) {
    Geometry g;
    g.source = config_vec2(doc, "geometry", "source");
    g.destination = config_vec2(doc, "geometry", "destination");
    g.eavesdropper = config_vec2(doc, "geometry", "eavesdropper");
    g.relay = config_vec2(doc, "geometry", "relay");
    g.alpha = config_double_or(doc, "geometry", "alpha", 2.0);
    g.power_r = config_double_or(doc, "powers", "p_r", 1.0);
    g.power_d = config_double_or(doc, "powers", "p_d", 1.0);
    g.power_2 = config_double_or(doc, "powers", "p_2", 1.0);
    GaussianOrthogonalChannel from_geom = gains_from_geometry(g);
    ch = from_geom;
  } else {
    throw parse_error(doc.origin() +
                      ": need a [channel] section or a [geometry] section "
                      "with a relay position");
  }
  ch.power_r = config_double_or(doc, "powers", "p_r", 1.0);
  ch.power_d = config_double_or(doc, "powers", "p_d", 1.0);
  ch.power_2 = config_double_or(doc, "powers", "p_2", 1.0);
  ch.eave_channel1 = config_bool_or(doc, "eavesdropper", "channel1", false);
  ch.eave_channel2 = config_bool_or(doc, "eavesdropper", "channel2", false);
  ch.validate();
  return ch;
}

SweepSpec sweep_from_config(const ConfigDoc& doc) {
  if (!doc.has_section("geometry")) {
    throw parse_error(doc.origin() + ": sweep needs a [geometry] section");
  }
  SweepSpec spec;
  spec.geometry.source = config_vec2(doc, "geometry", "source");
  spec.geometry.destination = config_vec2(doc, "geometry", "destination");
  spec.geometry.eavesdropper = config_vec2(doc, "geometry", "eavesdropper");
  spec.geometry.alpha = config_double_or(doc, "geometry", "alpha", 2.0);
  spec.geometry.power_r = config_double_or(doc, "powers", "p_r", 1.0);
  spec.geometry.power_d = config_double_or(doc, "powers", "p_d", 1.0);
  spec.geometry.power_2 = config_double_or(doc, "powers", "p_2", 1.0);
  spec.relay_from = config_vec2(doc, "geometry", "relay_from");
  spec.relay_to = config_vec2(doc, "geometry", "relay_to");
  const std::uint64_t samples = config_u64_or(doc, "geometry", "samples", 41);
  if (samples < 2) {
    throw parse_error(doc.origin() + ": [geometry] samples must be >= 2");
  }
  spec.samples = static_cast<std::size_t>(samples);
  return spec;
}

MimomeInstance mimome_from_config(const ConfigDoc& doc) {
  if (!doc.has_section("mimome")) {
    throw parse_error(doc.origin() + ": need a [mimome] section");
  }
  return MimomeInstance(config_matrix(doc, "mimome", "h"),
                        config_matrix(doc, "mimome", "h_e"),
                        config_matrix(doc, "mimome", "s"));
}

SearchConfig search_config_from_config(const ConfigDoc& doc,
                                       SearchConfig defaults) {
  SearchConfig cfg = defaults;
  // A report embeds the optimizer metadata it ran with; honor it first so a
  // report file regenerates itself, then let an [optimizer] section win.
  for (const char* section : {"report", "optimizer"}) {
    if (!doc.has_section(section)) continue;
    cfg.grid_points = static_cast<unsigned>(
        config_u64_or(doc, section, "grid", cfg.grid_points));
    cfg.restarts = static_cast<unsigned>(
        config_u64_or(doc, section, "restarts", cfg.restarts));
    cfg.seed = config_u64_or(doc, section, "seed", cfg.seed);
  }
  cfg.step_floor =
      config_double_or(doc, "optimizer", "step_floor", cfg.step_floor);
  cfg.max_iterations = static_cast<unsigned>(config_u64_or(
      doc, "optimizer", "max_iterations", cfg.max_iterations));
  cfg.validate();
  return cfg;
}

}  // namespace relaysec
