#include "cascade/config.hpp"

#include "cascade/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace cascade {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& key, int line) {
  double x = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(x))
    throw ParseError(line, "'" + key + "' expects a finite number, got '" + v + "'");
  return x;
}

int parse_int(const std::string& v, const std::string& key, int line) {
  int x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ParseError(line, "'" + key + "' expects an integer, got '" + v + "'");
  return x;
}

template <class F>
auto parse_enum(F&& f, const std::string& v, const std::string& key, int line) {
  try {
    return f(v);
  } catch (const Error&) {
    throw ParseError(line, "invalid value '" + v + "' for '" + key + "'");
  }
}

void require(bool ok, const std::string& key, const std::string& rule) {
  if (!ok) throw RangeError("'" + key + "' " + rule);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::map<std::string, double> sys;
  std::istringstream in(text);
  std::string raw, section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (line == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "system" && section != "grid" && section != "output" && section != "options")
        throw UnknownKey("line " + std::to_string(line) + ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ParseError(line, "missing key");
    if (value.empty()) throw ParseError(line, "missing value for '" + key + "'");
    if (section.empty()) throw ParseError(line, "'" + key + "' appears before any section header");

    auto unknown = [&] { throw UnknownKey("line " + std::to_string(line) + ": unknown key '" + key + "' in [" + section + "]"); };
    if (section == "system") {
      static const std::map<std::string, std::string> canonical = {
          {"omega1", "omega1"},   {"omega_rf", "omega_rf"}, {"omega2", "omega_rf"}, {"omega3", "omega3"},
          {"delta1", "delta1"},   {"delta2", "delta2"},     {"delta_rf", "delta2"}, {"delta3", "delta3"},
          {"gamma2", "gamma2"},   {"gamma3", "gamma3"},     {"gamma4", "gamma4"},   {"gamma23", "gamma23"},
          {"gamma34", "gamma34"}, {"gamma24", "gamma24"}};
      if (key == "preset") {
        c.preset = parse_enum(gamma_preset_from_string, value, key, line);
      } else if (auto it = canonical.find(key); it != canonical.end()) {
        sys[it->second] = parse_double(value, key, line);
      } else {
        unknown();
      }
    } else if (section == "grid") {
      if (key == "tau_max") c.tau_max = parse_double(value, key, line);
      else if (key == "tau_points") c.tau_points = parse_int(value, key, line);
      else if (key == "spacing") c.spacing = parse_enum(spacing_from_string, value, key, line);
      else unknown();
    } else if (section == "output") {
      if (key == "path") c.path = value;
      else if (key == "precision") c.precision = parse_int(value, key, line);
      else unknown();
    } else {
      if (key == "backend") c.backend = parse_enum(backend_from_string, value, key, line);
      else if (key == "cs_definition") c.cs_definition = parse_enum(cs_definition_from_string, value, key, line);
      else unknown();
    }
  }

  const SystemParams base = SystemParams::preset(c.preset);
  auto get = [&](const char* k, double dflt) {
    auto it = sys.find(k);
    return it == sys.end() ? dflt : it->second;
  };
  SystemParams p = SystemParams::from_gammas(get("gamma2", base.gamma2), get("gamma3", base.gamma3),
                                             get("gamma4", base.gamma4));
  p.gamma23 = get("gamma23", p.gamma23);
  p.gamma34 = get("gamma34", p.gamma34);
  p.gamma24 = get("gamma24", p.gamma24);
  p.omega1 = get("omega1", 0.0);
  p.omega_rf = get("omega_rf", 0.0);
  p.omega3 = get("omega3", 0.0);
  p.delta1 = get("delta1", 0.0);
  p.delta2 = get("delta2", 0.0);
  p.delta3 = get("delta3", 0.0);

  for (const char* k : {"omega1", "omega_rf", "omega3", "gamma23", "gamma34", "gamma24"})
    require(get(k, 0.0) >= 0.0, k, "must be >= 0");
  require(p.gamma2 > 0.0, "gamma2", "must be > 0");
  require(p.gamma3 > 0.0, "gamma3", "must be > 0");
  require(p.gamma4 > 0.0, "gamma4", "must be > 0");
  require(c.tau_max > 0.0, "tau_max", "must be > 0");
  require(c.tau_points >= 16, "tau_points", "must be >= 16");
  require(c.precision >= 6 && c.precision <= 17, "precision", "must be in [6, 17]");
  c.system = p;
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace cascade
