#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abring/entropy.hpp"
#include "abring/model.hpp"

namespace abring {

enum class OutputFormat { Csv, Json };

struct GridConfig {
  std::size_t r_points = 4096;
  std::size_t k_points = 4096;
  std::optional<double> r_max;  // auto when empty
  std::optional<double> k_max;  // auto when empty
  bool convergence_check = true;
};

/// One sweep axis. Several parameters may be swept together ("b_field:phi_ab");
/// each point then holds one value per parameter.
struct SweepAxis {
  std::vector<std::string> params;
  std::vector<std::vector<double>> points;
};

struct OutputConfig {
  OutputFormat format = OutputFormat::Csv;
  std::string path;  // empty or "-" means stdout
};

struct FigureConfig {
  double r_min = 0.05;
  double r_max = 10.0;
  std::size_t points = 500;
  std::vector<double> b_field;
  std::vector<double> alpha;
  std::vector<double> phi_ab;
};

struct RunConfig {
  ModelParams physical;
  std::optional<double> phi_ab;  // when set, overrides physical.xi through the flux quantum
  QuantumNumbers quantum;
  GridConfig grid;
  std::vector<SweepAxis> sweep;
  OutputConfig output;
  FigureConfig figures;
};

/// A fully resolved parameter point.
struct SweepPoint {
  ModelParams params;
  QuantumNumbers qn;
};

/// Parses INI-style text with [physical], [quantum], [grid], [sweep], [output] and
/// [figures] sections. Throws ConfigError with the offending key or line.
RunConfig parse_config(std::string_view text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

/// Cartesian product of the sweep axes, first axis outermost. No axes gives the base point.
std::vector<SweepPoint> expand_sweep(const RunConfig& config);

/// Applies a named parameter ("b_field", "phi_ab", "n", ...). Throws ConfigError for
/// unknown names. phi_ab is stored and resolved by resolve_flux.
void apply_parameter(ModelParams& params, QuantumNumbers& qn, std::optional<double>& phi_ab,
                     const std::string& name, double value);

PipelineOptions pipeline_options(const GridConfig& grid);

/// Parameter names accepted in [physical], [quantum] and sweep axes.
const std::vector<std::string>& parameter_names();

/// Echo of every physical parameter and quantum number as "key=value" pairs.
std::string describe(const SweepPoint& point);

}  // namespace abring
