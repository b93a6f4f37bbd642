#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpf/workload.hpp"

namespace dpf {

/// Executes workload commands against one implementation.
class Backend {
 public:
  virtual ~Backend() = default;
  /// Output line of the command, if any. Precondition violations come back
  /// as "error <message>" lines rather than exceptions.
  virtual std::optional<std::string> execute(const Command& command) = 0;

  /// Whether `other`, produced by the implementation under test, is an
  /// acceptable answer given this backend's own output for the command just
  /// executed. Exact match by default.
  virtual bool accepts(const Command& command, const std::optional<std::string>& own,
                       const std::optional<std::string>& other) const {
    (void)command;
    return own == other;
  }
};

using BackendFactory = std::function<std::unique_ptr<Backend>(std::uint64_t n)>;

std::unique_ptr<Backend> make_engine_backend(std::uint64_t n);
std::unique_ptr<Backend> make_oracle_backend(std::uint64_t n);

struct Divergence {
  std::size_t op_index = 0;  // 0-based position in Workload::ops
  Command command;
  std::optional<std::string> engine;
  std::optional<std::string> oracle;

  std::string to_string() const;
};

struct RunResult {
  std::vector<std::string> lines;
  std::optional<Divergence> divergence;
};

/// Runs the workload on one backend.
std::vector<std::string> run_single(const Workload& workload, Backend& backend);

/// Runs the workload on two backends in lockstep and stops at the first
/// command whose outputs differ. Lines are those both sides agreed on.
RunResult run_both(const Workload& workload, Backend& engine, Backend& oracle);
RunResult run_both(const Workload& workload, const BackendFactory& engine = make_engine_backend,
                   const BackendFactory& oracle = make_oracle_backend);

/// Relative op weights for random workload generation.
///
/// Text form: comma-separated `name=weight`, e.g. "update=4,query=4,delete=1".
/// Names are workload keywords. pc_* kinds cannot be combined with the others:
/// a pc-only mix generates valid path-connectivity workloads.
struct OpMix {
  std::array<std::uint32_t, kOpKindCount> weights{};

  static OpMix defaults();
  static OpMix path_defaults();
  static OpMix parse(std::string_view text);

  std::uint32_t weight(OpKind kind) const { return weights[static_cast<std::size_t>(kind)]; }
  bool path_mode() const;
};

/// Deterministic random workload. Every referenced id is live at the time
/// its command runs, except for deliberate precondition probes (delete on a
/// node with incoming edges, pc_del of a missing edge).
Workload generate_workload(std::uint64_t seed, std::size_t n, std::size_t ops, const OpMix& mix);

struct FuzzReport {
  Workload workload;
  std::optional<Divergence> divergence;
  // Failing workload after shrinking; empty when no divergence was found.
  std::optional<Workload> minimized;

  bool ok() const { return !divergence.has_value(); }
  std::string to_string() const;
};

FuzzReport fuzz(std::uint64_t seed, std::size_t n, std::size_t ops, const OpMix& mix,
                const BackendFactory& engine = make_engine_backend,
                const BackendFactory& oracle = make_oracle_backend);

/// Shrinks a diverging workload: truncate after the first divergence, then
/// drop chunks of commands while the two backends still disagree.
Workload minimize(const Workload& failing, const BackendFactory& engine,
                  const BackendFactory& oracle);

struct BenchRecord {
  std::size_t n = 0;
  std::string op_kind;
  std::uint64_t ops_executed = 0;
  std::uint64_t total_ns = 0;
  std::uint64_t total_rotations = 0;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  // Operations per size; when zero, ops_per_node * n is used instead.
  std::uint64_t ops = 0;
  std::uint64_t ops_per_node = 10;
  std::uint64_t seed = 1;
};

/// Engine-only scaling run. Per size: a phase of random updates followed by a
/// phase of random queries (k uniform over 64 bits), one record per phase.
std::vector<BenchRecord> bench(const BenchOptions& options);

std::string bench_csv(std::span<const BenchRecord> records);

}  // namespace dpf
