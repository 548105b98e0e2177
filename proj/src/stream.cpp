#include "metenum/stream.hpp"

#include <algorithm>
#include <deque>

#include "metenum/error.hpp"

namespace metenum {

std::optional<Step> SolutionStream::step() {
  if (exhausted_) return std::nullopt;
  if (!steps_.advance()) {
    exhausted_ = true;
    max_gap_ = std::max(max_gap_, ticks_ - last_emission_);
    return std::nullopt;
  }
  Step s = std::move(steps_.value());
  ticks_ += s.ticks;
  if (s.solution) {
    max_gap_ = std::max(max_gap_, ticks_ - last_emission_);
    last_emission_ = ticks_;
    ++emitted_;
    if (record_) emission_ticks_.push_back(ticks_);
  }
  return s;
}

std::optional<VertexSet> SolutionStream::next() {
  while (auto s = step()) {
    if (s->solution) return std::move(s->solution);
  }
  return std::nullopt;
}

std::vector<VertexSet> collect(SolutionStream& stream) {
  std::vector<VertexSet> out;
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

namespace {

Generator<Step> replay(std::vector<VertexSet> sets) {
  for (auto& s : sets) co_yield Step::emit(std::move(s));
}

Generator<Step> regularize(SolutionStream inner, std::uint64_t budget) {
  std::deque<VertexSet> queue;
  std::uint64_t now = 0;
  std::uint64_t due = budget;
  while (auto event = inner.step()) {
    std::uint64_t remaining = event->ticks;
    while (remaining > 0 && now + remaining >= due) {
      const auto advance = due - now;
      if (advance > 0) co_yield Step::work(advance);
      now = due;
      remaining -= advance;
      if (!queue.empty()) {
        co_yield Step::emit(std::move(queue.front()));
        queue.pop_front();
      }
      due += budget;
    }
    if (remaining > 0) {
      co_yield Step::work(remaining);
      now += remaining;
    }
    if (event->solution) queue.push_back(std::move(*event->solution));
  }
  while (!queue.empty()) {
    co_yield Step::work(due - now);
    now = due;
    co_yield Step::emit(std::move(queue.front()));
    queue.pop_front();
    due += budget;
  }
}

}  // namespace

SolutionStream stream_of(std::vector<VertexSet> sets) { return SolutionStream(replay(std::move(sets))); }

SolutionStream regularize_delay(SolutionStream inner, std::uint64_t budget) {
  if (budget == 0) throw Error(ErrorCode::kInvalidInput, "regularization budget must be >= 1");
  return SolutionStream(regularize(std::move(inner), budget));
}

}  // namespace metenum
