#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace semiarc {

using PointId = std::uint8_t;
using LineId = std::uint8_t;

// Set of plane points as a 256-bit mask; bit i is point id i. PG(2,13) has 183
// points, so every plane in scope fits and one line mask is one AVX2 register.
class alignas(32) PointSet {
 public:
  static constexpr int kCapacity = 256;

  PointSet() = default;
  PointSet(std::initializer_list<int> ids) {
    for (int id : ids) insert(static_cast<PointId>(id));
  }
  static PointSet of(std::span<const PointId> ids) {
    PointSet s;
    for (PointId id : ids) s.insert(id);
    return s;
  }

  void insert(PointId id) noexcept { words_[id >> 6] |= std::uint64_t{1} << (id & 63); }
  void erase(PointId id) noexcept { words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63)); }
  bool contains(PointId id) const noexcept { return (words_[id >> 6] >> (id & 63)) & 1U; }

  int size() const noexcept {
    return std::popcount(words_[0]) + std::popcount(words_[1]) + std::popcount(words_[2]) +
           std::popcount(words_[3]);
  }
  bool empty() const noexcept { return (words_[0] | words_[1] | words_[2] | words_[3]) == 0; }

  // Smallest member, or -1 when empty.
  int first() const noexcept {
    for (int i = 0; i < 4; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < 4; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<PointId>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<PointId> members() const {
    std::vector<PointId> out;
    out.reserve(size());
    for_each([&](PointId id) { out.push_back(id); });
    return out;
  }

  const std::array<std::uint64_t, 4>& words() const noexcept { return words_; }
  std::array<std::uint64_t, 4>& words() noexcept { return words_; }

  PointSet& operator|=(const PointSet& o) noexcept {
    for (int i = 0; i < 4; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) noexcept {
    for (int i = 0; i < 4; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  PointSet& operator-=(const PointSet& o) noexcept {
    for (int i = 0; i < 4; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend PointSet operator|(PointSet a, const PointSet& b) noexcept { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) noexcept { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) noexcept { return a -= b; }
  friend bool operator==(const PointSet& a, const PointSet& b) noexcept = default;

  int intersection_size(const PointSet& o) const noexcept {
    return std::popcount(words_[0] & o.words_[0]) + std::popcount(words_[1] & o.words_[1]) +
           std::popcount(words_[2] & o.words_[2]) + std::popcount(words_[3] & o.words_[3]);
  }

  // Lexicographic order of the sorted member lists.
  friend bool lex_less(const PointSet& a, const PointSet& b) noexcept {
    for (int i = 0; i < 4; ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      const std::uint64_t low = diff & (~diff + 1);
      const std::uint64_t above = ~(low | (low - 1));
      const bool in_a = (a.words_[i] & low) != 0;
      // The other set wins only if it ends before reaching the differing point.
      bool other_continues = ((in_a ? b.words_[i] : a.words_[i]) & above) != 0;
      for (int j = i + 1; j < 4 && !other_continues; ++j) other_continues = (in_a ? b.words_[j] : a.words_[j]) != 0;
      return in_a ? other_continues : !other_continues;
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, 4> words_{};
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

}  // namespace semiarc
