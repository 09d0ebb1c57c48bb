#include "abring/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "abring/error.hpp"

namespace abring {

namespace {

namespace pt = boost::property_tree;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(const std::string& text, const std::string& where) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(where + ": expected a number, got '" + text + "'");
  }
  return value;
}

std::size_t parse_count(const std::string& text, const std::string& where, std::size_t minimum) {
  const double v = parse_number(text, where);
  if (v != std::floor(v) || v < static_cast<double>(minimum)) {
    throw ConfigError(where + ": expected an integer >= " + std::to_string(minimum));
  }
  return static_cast<std::size_t>(v);
}

std::optional<double> parse_auto(const std::string& text, const std::string& where) {
  if (text == "auto") return std::nullopt;
  const double v = parse_number(text, where);
  if (!(v > 0.0)) throw ConfigError(where + ": must be 'auto' or > 0");
  return v;
}

bool parse_bool(const std::string& text, const std::string& where) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ConfigError(where + ": expected true or false");
}

std::vector<double> parse_list(const std::string& text, const std::string& where) {
  std::vector<double> values;
  if (trim(text).empty()) return values;
  for (const auto& item : split(text, ',')) values.push_back(parse_number(item, where));
  return values;
}

int as_integer(double v, const std::string& name) {
  if (v != std::floor(v) || std::abs(v) > 1e6) throw ConfigError(name + ": must be an integer");
  return static_cast<int>(v);
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void read_physical(const pt::ptree& section, RunConfig& cfg) {
  bool has_xi = false;
  bool has_phi = false;
  for (const auto& [key, node] : section) {
    const std::string where = "[physical] " + key;
    if (key == "n" || key == "m") throw ConfigError(where + ": quantum numbers belong in [quantum]");
    const double v = parse_number(node.data(), where);
    has_xi = has_xi || key == "xi";
    has_phi = has_phi || key == "phi_ab";
    QuantumNumbers unused;
    apply_parameter(cfg.physical, unused, cfg.phi_ab, key, v);
  }
  if (has_xi && has_phi) throw ConfigError("[physical]: give either xi or phi_ab, not both");
}

void read_quantum(const pt::ptree& section, RunConfig& cfg) {
  for (const auto& [key, node] : section) {
    const std::string where = "[quantum] " + key;
    if (key != "n" && key != "m") throw ConfigError(where + ": unknown key (expected n or m)");
    std::optional<double> unused;
    apply_parameter(cfg.physical, cfg.quantum, unused, key, parse_number(node.data(), where));
  }
}

void read_grid(const pt::ptree& section, RunConfig& cfg) {
  for (const auto& [key, node] : section) {
    const std::string where = "[grid] " + key;
    const std::string& v = node.data();
    if (key == "r_points") cfg.grid.r_points = parse_count(v, where, 5);
    else if (key == "k_points") cfg.grid.k_points = parse_count(v, where, 2);
    else if (key == "r_max") cfg.grid.r_max = parse_auto(v, where);
    else if (key == "k_max") cfg.grid.k_max = parse_auto(v, where);
    else if (key == "convergence_check") cfg.grid.convergence_check = parse_bool(v, where);
    else throw ConfigError(where + ": unknown key");
  }
}

void read_sweep(const pt::ptree& section, RunConfig& cfg) {
  const auto& known = parameter_names();
  for (const auto& [key, node] : section) {
    const std::string where = "[sweep] " + key;
    SweepAxis axis;
    axis.params = split(key, ':');
    for (const auto& p : axis.params) {
      if (std::find(known.begin(), known.end(), p) == known.end()) {
        throw ConfigError(where + ": unknown parameter '" + p + "'");
      }
    }
    const auto items = split(node.data(), ',');
    for (const auto& item : items) {
      if (item.empty()) continue;
      const auto fields = split(item, ':');
      if (fields.size() != axis.params.size()) {
        throw ConfigError(where + ": point '" + item + "' needs " + std::to_string(axis.params.size()) + " values");
      }
      std::vector<double> point;
      for (const auto& f : fields) point.push_back(parse_number(f, where));
      axis.points.push_back(std::move(point));
    }
    if (axis.points.empty()) continue;  // an empty axis does not multiply the sweep
    cfg.sweep.push_back(std::move(axis));
  }
}

void read_output(const pt::ptree& section, RunConfig& cfg) {
  for (const auto& [key, node] : section) {
    const std::string where = "[output] " + key;
    if (key == "format") {
      if (node.data() == "csv") cfg.output.format = OutputFormat::Csv;
      else if (node.data() == "json") cfg.output.format = OutputFormat::Json;
      else throw ConfigError(where + ": expected csv or json");
    } else if (key == "path") {
      cfg.output.path = node.data();
    } else {
      throw ConfigError(where + ": unknown key");
    }
  }
}

void read_figures(const pt::ptree& section, RunConfig& cfg) {
  auto& fig = cfg.figures;
  for (const auto& [key, node] : section) {
    const std::string where = "[figures] " + key;
    if (key == "r_min") fig.r_min = parse_number(node.data(), where);
    else if (key == "r_max") fig.r_max = parse_number(node.data(), where);
    else if (key == "points") fig.points = parse_count(node.data(), where, 2);
    else if (key == "b_field") fig.b_field = parse_list(node.data(), where);
    else if (key == "alpha") fig.alpha = parse_list(node.data(), where);
    else if (key == "phi_ab") fig.phi_ab = parse_list(node.data(), where);
    else throw ConfigError(where + ": unknown key");
  }
  if (!(fig.r_min > 0.0) || !(fig.r_max > fig.r_min)) {
    throw ConfigError("[figures]: need 0 < r_min < r_max");
  }
}

void resolve_flux(ModelParams& params, const std::optional<double>& phi_ab) {
  if (phi_ab) params.set_phi_ab(*phi_ab);
}

}  // namespace

const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names = {"mass", "hbar",   "charge", "light_speed", "delta", "v1",
                                                 "b_field", "xi", "phi_ab", "alpha",       "n",     "m"};
  return names;
}

void apply_parameter(ModelParams& p, QuantumNumbers& qn, std::optional<double>& phi_ab, const std::string& name,
                     double value) {
  if (name == "mass") p.mass = value;
  else if (name == "hbar") p.hbar = value;
  else if (name == "charge") p.charge = value;
  else if (name == "light_speed") p.light_speed = value;
  else if (name == "delta") p.delta = value;
  else if (name == "v1") p.v1 = value;
  else if (name == "b_field") p.b_field = value;
  else if (name == "alpha") p.alpha = value;
  else if (name == "xi") {
    p.xi = value;
    phi_ab.reset();
  } else if (name == "phi_ab") phi_ab = value;
  else if (name == "n") {
    qn.n = as_integer(value, name);
    if (qn.n < 0) throw ConfigError("n: must be >= 0");
  } else if (name == "m") qn.m = as_integer(value, name);
  else throw ConfigError("unknown parameter '" + name + "'");
}

RunConfig parse_config(std::string_view text, const std::string& source) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  RunConfig cfg;
  try {
    for (const auto& [name, section] : tree) {
      if (!section.data().empty() && section.empty()) {
        throw ConfigError("key '" + name + "' must be inside a section");
      }
      if (name == "physical") read_physical(section, cfg);
      else if (name == "quantum") read_quantum(section, cfg);
      else if (name == "grid") read_grid(section, cfg);
      else if (name == "sweep") read_sweep(section, cfg);
      else if (name == "output") read_output(section, cfg);
      else if (name == "figures") read_figures(section, cfg);
      else throw ConfigError("unknown section [" + name + "]");
    }
    ModelParams check = cfg.physical;
    resolve_flux(check, cfg.phi_ab);
    check.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

std::vector<SweepPoint> expand_sweep(const RunConfig& cfg) {
  std::size_t total = 1;
  for (const auto& axis : cfg.sweep) total *= axis.points.size();

  std::vector<SweepPoint> points;
  points.reserve(total);
  std::vector<std::size_t> index(cfg.sweep.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    SweepPoint point{cfg.physical, cfg.quantum};
    std::optional<double> phi = cfg.phi_ab;
    for (std::size_t a = 0; a < cfg.sweep.size(); ++a) {
      const auto& axis = cfg.sweep[a];
      for (std::size_t p = 0; p < axis.params.size(); ++p) {
        try {
          apply_parameter(point.params, point.qn, phi, axis.params[p], axis.points[index[a]][p]);
        } catch (const ConfigError& e) {
          throw ConfigError(std::string("[sweep] ") + e.what());
        }
      }
    }
    resolve_flux(point.params, phi);
    try {
      point.params.validate();
    } catch (const DomainError& e) {
      throw ConfigError(std::string("[sweep] ") + e.what());
    }
    points.push_back(point);
    // Last axis varies fastest.
    for (std::size_t a = cfg.sweep.size(); a-- > 0;) {
      if (++index[a] < cfg.sweep[a].points.size()) break;
      index[a] = 0;
    }
  }
  return points;
}

PipelineOptions pipeline_options(const GridConfig& grid) {
  PipelineOptions o;
  o.radial.points = grid.r_points;
  o.radial.r_max = grid.r_max;
  o.k_points = grid.k_points;
  o.k_max = grid.k_max;
  o.check_convergence = grid.convergence_check;
  return o;
}

std::string describe(const SweepPoint& point) {
  const auto& p = point.params;
  std::string out;
  auto add = [&](const char* key, const std::string& value) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += value;
  };
  add("mass", format_value(p.mass));
  add("hbar", format_value(p.hbar));
  add("charge", format_value(p.charge));
  add("light_speed", format_value(p.light_speed));
  add("delta", format_value(p.delta));
  add("v1", format_value(p.v1));
  add("b_field", format_value(p.b_field));
  add("xi", format_value(p.xi));
  add("phi_ab", format_value(p.phi_ab()));
  add("alpha", format_value(p.alpha));
  add("n", std::to_string(point.qn.n));
  add("m", std::to_string(point.qn.m));
  return out;
}

}  // namespace abring
