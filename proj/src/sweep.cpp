#include "abring/sweep.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace abring {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string general(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string scientific(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

// Non-finite values become null in JSON.
nlohmann::ordered_json number(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

unsigned threads_from_env() {
  if (const char* env = std::getenv("ABRING_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<EnergyRow> run_energy(const RunConfig& config, unsigned threads) {
  const auto points = expand_sweep(config);
  std::vector<EnergyRow> rows(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    rows[i].point = points[i];
    rows[i].state = energy_closed_form(points[i].params, points[i].qn);
  });
  return rows;
}

std::vector<EntropyRow> run_entropy(const RunConfig& config, unsigned threads) {
  const auto points = expand_sweep(config);
  const PipelineOptions options = pipeline_options(config.grid);
  std::vector<EntropyRow> rows(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    EntropyRow& row = rows[i];
    row.point = points[i];
    try {
      row.result = entropy_pipeline(points[i].params, points[i].qn, options);
    } catch (const Error& e) {
      row.failure = e.kind();
      row.message = e.what();
    } catch (const std::exception& e) {
      row.failure = ErrorKind::Numerical;
      row.message = e.what();
    }
  });
  return rows;
}

nlohmann::ordered_json to_json(const EntropyReport& r) {
  nlohmann::ordered_json j;
  j["s_r"] = number(r.s_r);
  j["s_k"] = number(r.s_k);
  j["sum"] = number(r.sum);
  j["bbm_bound"] = number(r.bbm_bound);
  j["margin"] = number(r.margin);
  j["pass"] = r.pass;
  j["norm_residual_r"] = number(r.norm_residual_r);
  j["norm_residual_k"] = number(r.norm_residual_k);
  return j;
}

std::string format_energy(const std::vector<EnergyRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json out;
    out["command"] = "energy";
    auto& list = out["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      const auto& p = row.point.params;
      nlohmann::ordered_json j;
      j["n"] = row.point.qn.n;
      j["m"] = row.point.qn.m;
      j["B"] = p.b_field;
      j["xi"] = p.xi;
      j["alpha"] = p.alpha;
      j["delta"] = p.delta;
      j["v1"] = p.v1;
      j["exists"] = row.state.exists;
      j["energy"] = row.state.exists ? number(row.state.energy) : nlohmann::ordered_json(nullptr);
      j["epsilon"] = row.state.exists ? number(row.state.epsilon) : nlohmann::ordered_json(nullptr);
      if (!row.state.exists) j["rejection"] = row.state.rejection;
      list.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "n,m,B,xi,alpha,delta,v1,energy,epsilon,exists\n";
  for (const auto& row : rows) {
    const auto& p = row.point.params;
    out << row.point.qn.n << ',' << row.point.qn.m << ',' << general(p.b_field) << ',' << general(p.xi) << ','
        << general(p.alpha) << ',' << general(p.delta) << ',' << general(p.v1) << ',';
    if (row.state.exists) {
      out << general(row.state.energy, 12) << ',' << general(row.state.epsilon, 12) << ",true\n";
    } else {
      out << ",,false\n";
    }
  }
  return out.str();
}

std::string format_entropy(const std::vector<EntropyRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json out;
    out["command"] = "entropy";
    auto& list = out["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      const auto& p = row.point.params;
      nlohmann::ordered_json j;
      j["n"] = row.point.qn.n;
      j["m"] = row.point.qn.m;
      j["B"] = p.b_field;
      j["phi_ab"] = p.phi_ab();
      j["xi"] = p.xi;
      j["alpha"] = p.alpha;
      j["delta"] = p.delta;
      j["v1"] = p.v1;
      j["exists"] = row.result.has_value();
      if (row.result) {
        const auto& d = row.result->diagnostics;
        j["energy"] = number(row.result->state.energy);
        j["report"] = to_json(row.result->report);
        j["diagnostics"] = {{"r_min", number(d.r_min)},
                            {"r_max", number(d.r_max)},
                            {"k_max", number(d.k_max)},
                            {"parseval_residual", number(d.parseval_residual)},
                            {"truncation_warning", d.truncation_warning},
                            {"convergence_delta", number(d.convergence_delta)},
                            {"under_resolved", d.under_resolved}};
      } else {
        j["report"] = nullptr;
        j["error"] = row.message;
      }
      list.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "n,m,B,phi_ab,alpha,s_r,s_k,sum,pass\n";
  for (const auto& row : rows) {
    const auto& p = row.point.params;
    out << row.point.qn.n << ',' << row.point.qn.m << ',' << general(p.b_field) << ',' << general(p.phi_ab())
        << ',' << general(p.alpha) << ',';
    if (row.result) {
      const auto& r = row.result->report;
      out << fixed6(r.s_r) << ',' << fixed6(r.s_k) << ',' << fixed6(r.sum) << ',' << (r.pass ? "true" : "false")
          << '\n';
    } else {
      out << ",,,\n";
    }
  }
  return out.str();
}

int entropy_exit_code(const std::vector<EntropyRow>& rows) {
  bool any_state = false;
  for (const auto& row : rows) {
    if (row.result) {
      any_state = true;
    } else if (row.failure && *row.failure != ErrorKind::NoBoundState) {
      return static_cast<int>(ErrorKind::Numerical);
    }
  }
  return any_state ? 0 : static_cast<int>(ErrorKind::NoBoundState);
}

std::string format_curve(const std::string& title, const SweepPoint& point, const std::vector<double>& x,
                         const std::vector<double>& y) {
  std::ostringstream out;
  out << "# " << title << "; " << describe(point) << '\n';
  for (std::size_t i = 0; i < x.size(); ++i) out << scientific(x[i]) << ' ' << scientific(y[i]) << '\n';
  return out.str();
}

FiguresOutcome write_figures(const RunConfig& config, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw IoError("cannot create output directory '" + directory.string() + "': " + ec.message());

  SweepPoint base{config.physical, config.quantum};
  if (config.phi_ab) base.params.set_phi_ab(*config.phi_ab);
  base.params.validate();
  const auto& fig = config.figures;

  struct Panel {
    char letter;
    const char* tag;
    const char* param;
    std::vector<double> values;
  };
  const std::vector<Panel> panels = {
      {'a', "B", "b_field", fig.b_field.empty() ? std::vector<double>{base.params.b_field} : fig.b_field},
      {'b', "alpha", "alpha", fig.alpha.empty() ? std::vector<double>{base.params.alpha} : fig.alpha},
      {'c', "phi", "phi_ab", fig.phi_ab.empty() ? std::vector<double>{base.params.phi_ab()} : fig.phi_ab},
  };

  FiguresOutcome outcome;
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream out(directory / name);
    out << text;
    if (!out) throw IoError("cannot write '" + (directory / name).string() + "'");
    outcome.written.push_back(name);
  };

  std::vector<double> r(fig.points);
  for (std::size_t i = 0; i < fig.points; ++i) {
    r[i] = fig.r_min + (fig.r_max - fig.r_min) * static_cast<double>(i) / static_cast<double>(fig.points - 1);
  }

  for (const auto& panel : panels) {
    for (double value : panel.values) {
      SweepPoint point = base;
      std::optional<double> phi;
      if (std::string(panel.param) != "phi_ab") phi = base.params.phi_ab();
      apply_parameter(point.params, point.qn, phi, panel.param, value);
      if (phi) point.params.set_phi_ab(*phi);
      point.params.validate();
      const std::string suffix = std::string(panel.tag) + general(value, 6) + ".dat";

      std::vector<double> potential(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) potential[i] = effective_potential(point.params, point.qn, r[i]);
      write(std::string("fig1") + panel.letter + "_" + suffix,
            format_curve("effective potential (columns r, V_eff)", point, r, potential));

      const std::string density_name = std::string("fig2") + panel.letter + "_" + suffix;
      try {
        RadialGrid grid{config.grid.r_points, config.grid.r_max};
        const auto psi = normalize(radial_eigenfunction(point.params, point.qn, grid)).function;
        const auto rho = probability_density(psi);
        write(density_name, format_curve("probability density (columns r, |psi|^2)", point, rho.abscissae, rho.values));
      } catch (const NoBoundStateError& e) {
        outcome.skipped.push_back(density_name + ": " + e.what());
      }
    }
  }
  return outcome;
}

}  // namespace abring
