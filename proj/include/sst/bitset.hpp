#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sst {

/// Fixed-universe dynamic bitset used for element sets and subgroup-id sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all();

  std::size_t count() const;
  bool none() const;
  bool is_subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  bool operator==(const Bitset& other) const = default;

  /// Calls f(i) for each set bit in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<std::uint32_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const;
  std::size_t hash() const;

  /// Lexicographic order of the ascending member sequences.
  static bool lex_less(const Bitset& a, const Bitset& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace sst
