#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace localchrom {

/// Hard upper bound on the order of any graph handled by the library.
inline constexpr int kMaxVertices = 256;

/// Fixed-capacity bitset over vertex indices 0..kMaxVertices-1.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* set, int v) : set_(set), v_(v) {}

    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& other) const { return v_ == other.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  /// The set {0, ..., n-1}.
  static VertexSet range(int n) {
    check_index(n == 0 ? 0 : n - 1);
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  static VertexSet from_vector(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  void insert(int v) {
    check_index(v);
    words_[v >> 6] |= bit(v);
  }
  void erase(int v) {
    check_index(v);
    words_[v >> 6] &= ~bit(v);
  }
  bool contains(int v) const {
    if (v < 0 || v >= kMaxVertices) return false;
    return (words_[v >> 6] & bit(v)) != 0;
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest element, or -1 when empty.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  /// Smallest element strictly greater than v, or -1.
  int next(int v) const {
    int start = v + 1;
    if (start >= kMaxVertices) return -1;
    int w = start >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (word) return w * 64 + std::countr_zero(word);
      if (++w == kWords) return -1;
      word = words_[w];
    }
  }

  /// Largest element, or -1 when empty.
  int last() const {
    for (int w = kWords - 1; w >= 0; --w)
      if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  bool is_subset_of(const VertexSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }
  int intersection_size(const VertexSet& other) const {
    int c = 0;
    for (int w = 0; w < kWords; ++w) c += std::popcount(words_[w] & other.words_[w]);
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  std::vector<int> to_vector() const { return {begin(), end()}; }

  /// "{0,3,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first_elem = true;
    for (int v : *this) {
      if (!first_elem) out += ',';
      out += std::to_string(v);
      first_elem = false;
    }
    return out + "}";
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }
  static void check_index(int v) {
    if (v < 0 || v >= kMaxVertices)
      throw std::out_of_range("vertex index " + std::to_string(v) + " outside 0.." +
                              std::to_string(kMaxVertices - 1));
  }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace localchrom
