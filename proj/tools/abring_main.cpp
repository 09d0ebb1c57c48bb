// Command-line front end. Talks to the library only through the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "abring/abring.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGeneric = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNoStates = 3;
constexpr int kExitNumerical = 4;

int exit_code(abring_status status) {
  switch (status) {
    case ABRING_OK: return kExitOk;
    case ABRING_ERROR_CONFIG: return kExitConfig;
    case ABRING_ERROR_NO_STATES: return kExitNoStates;
    case ABRING_ERROR_NUMERICAL: return kExitNumerical;
    default: return kExitGeneric;
  }
}

int report(abring_status status) {
  std::fprintf(stderr, "abring: %s", abring_status_string(status));
  const std::string detail = abring_last_error();
  if (!detail.empty()) std::fprintf(stderr, ": %s", detail.c_str());
  std::fputc('\n', stderr);
  return exit_code(status);
}

struct Options {
  std::string config;
  std::string out;
  std::string format;
  int criterion = 0;
};

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  return static_cast<bool>(file);
}

int run_table(const Options& opt, bool entropy) {
  abring_config* config = nullptr;
  if (auto s = abring_config_load(opt.config.c_str(), &config); s != ABRING_OK) return report(s);
  if (!opt.format.empty()) {
    abring_config_set_format(config, opt.format == "json" ? ABRING_FORMAT_JSON : ABRING_FORMAT_CSV);
  }
  std::string out = opt.out;
  if (out.empty()) {
    const char* configured = "";
    abring_config_output_path(config, &configured);
    out = configured;
  }

  abring_run* run = nullptr;
  const auto status = entropy ? abring_run_entropy(config, 0, &run) : abring_run_energy(config, 0, &run);
  abring_config_free(config);
  if (status != ABRING_OK) return report(status);

  const std::string text = abring_run_output(run);
  const auto run_status = abring_run_status(run);
  abring_run_free(run);
  if (!write_text(out, text)) {
    std::fprintf(stderr, "abring: cannot write %s\n", out.c_str());
    return kExitGeneric;
  }
  return run_status == ABRING_OK ? kExitOk : report(run_status);
}

int run_figures(const Options& opt) {
  abring_config* config = nullptr;
  if (auto s = abring_config_load(opt.config.c_str(), &config); s != ABRING_OK) return report(s);
  abring_run* run = nullptr;
  const auto status = abring_run_figures(config, opt.out.empty() ? "." : opt.out.c_str(), &run);
  abring_config_free(config);
  if (status != ABRING_OK) return report(status);
  std::fputs(abring_run_output(run), stdout);
  const auto run_status = abring_run_status(run);
  abring_run_free(run);
  return run_status == ABRING_OK ? kExitOk : report(run_status);
}

void print_check(int, int, const char* text, void*) {
  std::fputs(text, stdout);
  std::fflush(stdout);
}

int run_check(const Options& opt) {
  int all_passed = 0;
  const auto status =
      abring_check(opt.criterion, opt.config.empty() ? nullptr : opt.config.c_str(), print_check, nullptr, &all_passed);
  if (status != ABRING_OK) return report(status);
  return all_passed ? kExitOk : kExitGeneric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states and Shannon entropies of a screened Coulomb ring with AB flux"};
  app.set_version_flag("--version", std::string(abring_version()));
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* c = cmd->add_option("--config", opt.config, "INI configuration file");
    if (config_required) c->required()->check(CLI::ExistingFile);
    else c->check(CLI::ExistingFile);
  };

  auto* energy = app.add_subcommand("energy", "Closed-form energies over the configured sweep");
  auto* entropy = app.add_subcommand("entropy", "Position/momentum entropies and the BBM check");
  auto* figures = app.add_subcommand("figures", "Write effective-potential and density plot data");
  auto* check = app.add_subcommand("check", "Run the acceptance criteria");
  for (auto* cmd : {energy, entropy}) {
    add_common(cmd, true);
    cmd->add_option("--out", opt.out, "Output file (default: [output] path, else stdout)");
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }
  add_common(figures, true);
  figures->add_option("--out", opt.out, "Output directory (default: current directory)");
  add_common(check, false);
  check->add_option("--criterion", opt.criterion, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (energy->parsed()) return run_table(opt, false);
  if (entropy->parsed()) return run_table(opt, true);
  if (figures->parsed()) return run_figures(opt);
  return run_check(opt);
}
