#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace xyv {

using Vertex = std::size_t;

/// Hard limit on graph size; every vertex set is a single 64-bit word.
inline constexpr std::size_t kMaxVertices = 64;

/// Set of vertex indices in [0, 64), stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet from(const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  /// {0, ..., n-1}
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1u); }
  void insert(Vertex v) {
    if (v >= kMaxVertices) throw std::out_of_range("vertex index exceeds 64");
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(Vertex v) {
    if (v < 64) bits_ &= ~(std::uint64_t{1} << v);
  }
  void flip(Vertex v) {
    if (v >= kMaxVertices) throw std::out_of_range("vertex index exceeds 64");
    bits_ ^= std::uint64_t{1} << v;
  }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool parity() const { return std::popcount(bits_) & 1; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator^=(VertexSet o) { bits_ ^= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace xyv
