#include "metenum/vertex_set.hpp"

#include <algorithm>

#include "metenum/error.hpp"

namespace metenum {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "INVALID_INPUT";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kEmptyEdge: return "EMPTY_EDGE";
    case ErrorCode::kDisconnected: return "DISCONNECTED";
    case ErrorCode::kSizeLimit: return "SIZE_LIMIT";
    case ErrorCode::kPreconditionViolation: return "PRECONDITION_VIOLATION";
    case ErrorCode::kTrivialInstance: return "TRIVIAL_INSTANCE";
    case ErrorCode::kDecodeFailure: return "DECODE_FAILURE";
  }
  return "UNKNOWN";
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : bits_(universe) {
  for (Vertex v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe) {
      throw Error(ErrorCode::kInvalidInput,
                  "vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(universe));
    }
    bits_.set(static_cast<std::size_t>(v));
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

Vertex VertexSet::first() const {
  auto i = bits_.find_first();
  return i == Bits::npos ? -1 : static_cast<Vertex>(i);
}

Vertex VertexSet::next(Vertex v) const {
  auto i = bits_.find_next(static_cast<std::size_t>(v));
  return i == Bits::npos ? -1 : static_cast<Vertex>(i);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::resized(std::size_t universe) const {
  auto members = to_vector();
  return VertexSet(universe, members);
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  auto sa = a.size();
  auto sb = b.size();
  if (sa != sb) return sa < sb;
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return va < vb;
}

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

std::string format_one_based(const VertexSet& s) {
  std::string out;
  s.for_each([&](Vertex v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  });
  return out;
}

}  // namespace metenum
