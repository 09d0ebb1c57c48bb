#pragma once

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "abring/config.hpp"
#include "abring/entropy.hpp"
#include "abring/error.hpp"
#include "json.hpp"

namespace abring {

/// Worker count: ABRING_THREADS when set to a positive integer, else the hardware
/// concurrency (at least one).
unsigned threads_from_env();

/// Calls body(i) for i in [0, count) on up to `threads` workers. body must not throw.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

struct EnergyRow {
  SweepPoint point;
  BoundStateReport state;
};

struct EntropyRow {
  SweepPoint point;
  std::optional<PipelineResult> result;
  std::optional<ErrorKind> failure;  // NoBoundState or Numerical when result is empty
  std::string message;
};

std::vector<EnergyRow> run_energy(const RunConfig& config, unsigned threads = 1);
std::vector<EntropyRow> run_entropy(const RunConfig& config, unsigned threads = 1);

/// CSV header: n,m,B,xi,alpha,delta,v1,energy,epsilon,exists
std::string format_energy(const std::vector<EnergyRow>& rows, OutputFormat format);
/// CSV header: n,m,B,phi_ab,alpha,s_r,s_k,sum,pass
std::string format_entropy(const std::vector<EntropyRow>& rows, OutputFormat format);

/// Field names: s_r, s_k, sum, bbm_bound, margin, pass, norm_residual_r, norm_residual_k.
nlohmann::ordered_json to_json(const EntropyReport& report);

/// 0 ok, 3 when no row has a bound state, 4 when any row failed numerically.
int entropy_exit_code(const std::vector<EntropyRow>& rows);

struct FiguresOutcome {
  std::vector<std::string> written;
  std::vector<std::string> skipped;
};

/// Writes fig1{a,b,c}_<axis><value>.dat (effective potential) and fig2{a,b,c}_... (normalized
/// density) into directory. Panels a, b, c vary b_field, alpha and phi_ab respectively.
FiguresOutcome write_figures(const RunConfig& config, const std::filesystem::path& directory);

/// Plot-data text for one figure curve: header comment echoing every parameter,
/// then whitespace-separated (x, y) pairs.
std::string format_curve(const std::string& title, const SweepPoint& point, const std::vector<double>& x,
                         const std::vector<double>& y);

}  // namespace abring
