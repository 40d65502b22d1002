#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace powergraph {

/// Fixed-capacity dense bitset over vertex indices [0, capacity).
///
/// Binary operations require both operands to have the same capacity.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  VertexSet(std::size_t capacity, std::initializer_list<std::size_t> members)
      : VertexSet(capacity) {
    for (std::size_t v : members) insert(v);
  }

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t v = 0; v < capacity; ++v) s.insert(v);
    return s;
  }

  std::size_t capacity() const { return capacity_; }

  bool contains(std::size_t v) const {
    assert(v < capacity_);
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void insert(std::size_t v) {
    assert(v < capacity_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(std::size_t v) {
    assert(v < capacity_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Smallest member, or capacity() when empty.
  std::size_t first() const { return next(0); }
  /// Smallest member >= from, or capacity() when there is none.
  std::size_t next(std::size_t from) const {
    if (from >= capacity_) return capacity_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return capacity_;
      w = words_[wi];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        fn((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Members in ascending order.
  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace powergraph
