#include "sst/bitset.hpp"

namespace sst {

void Bitset::set_all() {
  for (auto& w : words_) w = ~std::uint64_t{0};
  if (size_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool Bitset::intersects(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<std::uint32_t> Bitset::to_vector() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

std::size_t Bitset::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ size_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool Bitset::lex_less(const Bitset& a, const Bitset& b) {
  const std::size_t n = a.words_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (!diff) continue;
    const int bit = std::countr_zero(diff);
    const bool in_a = (a.words_[i] >> bit) & 1u;
    // the set lacking the first differing element continues with a larger
    // element (and is therefore larger) unless it has run out of members
    const Bitset& lacking = in_a ? b : a;
    bool lacking_has_more = false;
    const std::uint64_t above =
        bit == 63 ? 0 : lacking.words_[i] & (~std::uint64_t{0} << (bit + 1));
    if (above) lacking_has_more = true;
    for (std::size_t j = i + 1; j < n && !lacking_has_more; ++j)
      if (lacking.words_[j]) lacking_has_more = true;
    return in_a ? lacking_has_more : !lacking_has_more;
  }
  return false;
}

}  // namespace sst
