#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace cayley {

/// Dense bitset over vertex ids [0, universe).
///
/// All set algebra is word-parallel. Binary operations require both operands
/// to share the same universe.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<int> members)
      : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(static_cast<int>(v));
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(int v) const noexcept {
    assert(v >= 0 && v < universe_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(int v) noexcept {
    assert(v >= 0 && v < universe_);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(int v) noexcept {
    assert(v >= 0 && v < universe_);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

  int count() const noexcept {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(),
                       [](Word w) { return w == 0; });
  }
  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  int intersection_count(const VertexSet& o) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  int first() const noexcept { return next(0); }
  /// Smallest member >= from, or -1.
  int next(int from) const noexcept {
    if (from >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return static_cast<int>(wi * kWordBits) + std::countr_zero(w);
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<int>(wi * kWordBits) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  /// Complement within the universe.
  VertexSet complement() const {
    VertexSet c = *this;
    for (auto& w : c.words_) w = ~w;
    c.trim();
    return c;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Lexicographic order on the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    return a.members() < b.members();
  }

  const std::vector<Word>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(universe_) * 0x9E3779B97F4A7C15ULL;
    for (Word w : words_) {
      h ^= static_cast<std::size_t>(w) + 0x9E3779B97F4A7C15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }
  void trim() noexcept {
    int rem = universe_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace cayley
