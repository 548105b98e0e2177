#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metenum/generator.hpp"
#include "metenum/vertex_set.hpp"

namespace metenum {

// One event of an enumeration: some amount of work (ticks) and/or a solution.
// A tick is one edge-membership test batch; producers report them at their
// natural checkpoints so that delays are measured independently of the machine.
struct Step {
  std::uint64_t ticks = 0;
  std::optional<VertexSet> solution;

  static Step work(std::uint64_t ticks = 1) { return Step{ticks, std::nullopt}; }
  static Step emit(VertexSet s) { return Step{0, std::move(s)}; }
};

// Pull-based, single-owner stream of solutions with tick instrumentation.
class SolutionStream {
 public:
  SolutionStream() = default;
  explicit SolutionStream(Generator<Step> steps) : steps_(std::move(steps)) {}

  // Next raw event, or nullopt once exhausted.
  std::optional<Step> step();
  // Next solution, consuming intermediate work events.
  std::optional<VertexSet> next();

  bool exhausted() const { return exhausted_; }
  std::uint64_t ticks() const { return ticks_; }
  std::size_t emitted() const { return emitted_; }
  // Largest tick gap before the first, between consecutive, and (once exhausted)
  // after the last solution.
  std::uint64_t max_gap() const { return max_gap_; }

  void record_emission_ticks(bool on) { record_ = on; }
  const std::vector<std::uint64_t>& emission_ticks() const { return emission_ticks_; }

 private:
  Generator<Step> steps_;
  bool exhausted_ = false;
  std::uint64_t ticks_ = 0;
  std::uint64_t last_emission_ = 0;
  std::uint64_t max_gap_ = 0;
  std::size_t emitted_ = 0;
  bool record_ = false;
  std::vector<std::uint64_t> emission_ticks_;
};

std::vector<VertexSet> collect(SolutionStream& stream);
inline std::vector<VertexSet> collect(SolutionStream&& stream) { return collect(stream); }

// Stream over a fixed list (no work ticks).
SolutionStream stream_of(std::vector<VertexSet> sets);

// Buffers the inner stream in a FIFO and releases the front solution at every
// `budget`-tick slot of the shared clock; once the inner stream is exhausted the
// remaining backlog keeps being released one per slot.
SolutionStream regularize_delay(SolutionStream inner, std::uint64_t budget);

}  // namespace metenum
