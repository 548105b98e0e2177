#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace metenum {

using Vertex = int;

// A subset of a dense universe {0, ..., universe-1}.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Vertex v) const { return bits_.test(static_cast<std::size_t>(v)); }

  VertexSet& insert(Vertex v) {
    bits_.set(static_cast<std::size_t>(v));
    return *this;
  }
  VertexSet& erase(Vertex v) {
    bits_.reset(static_cast<std::size_t>(v));
    return *this;
  }

  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }
  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool is_proper_subset_of(const VertexSet& other) const {
    return bits_.is_proper_subset_of(other.bits_);
  }

  // Lowest member, or -1 when empty.
  Vertex first() const;
  // Next member after v, or -1.
  Vertex next(Vertex v) const;

  std::vector<Vertex> to_vector() const;
  // Same members over a (possibly) different universe; members must fit.
  VertexSet resized(std::size_t universe) const;

  VertexSet& operator|=(const VertexSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

  const Bits& bits() const { return bits_; }

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      f(static_cast<Vertex>(i));
    }
  }

 private:
  Bits bits_;
};

// Size first, then lexicographic on the sorted member list.
bool canonical_less(const VertexSet& a, const VertexSet& b);
void sort_canonical(std::vector<VertexSet>& sets);

// "1 3 5" style, 1-based, ascending.
std::string format_one_based(const VertexSet& s);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    return std::hash<VertexSet::Bits>{}(s.bits());
  }
};

}  // namespace metenum
