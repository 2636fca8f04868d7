#ifndef HRC_BITSET_HPP
#define HRC_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

namespace hrc {

// Fixed-size dynamic bitset used as run-set storage.  Sets up to 128 bits
// live inline; larger ones spill to the heap.  All binary operations require
// equal sizes (enforced by the callers, which equalize alphabets first).
class Bitset {
 public:
  Bitset() : nbits_(0), nwords_(0) { inline_[0] = inline_[1] = 0; }

  explicit Bitset(std::uint64_t nbits, bool value = false)
      : nbits_(nbits), nwords_((nbits + 63) / 64) {
    inline_[0] = inline_[1] = 0;
    if (nwords_ > kInlineWords) heap_.resize(nwords_, 0);
    if (value) {
      std::uint64_t *w = words();
      for (std::uint64_t i = 0; i < nwords_; ++i) w[i] = ~0ull;
      mask_tail();
    }
  }

  std::uint64_t size() const { return nbits_; }

  bool test(std::uint64_t i) const {
    return (words()[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::uint64_t i, bool value = true) {
    std::uint64_t &w = words()[i >> 6];
    std::uint64_t m = 1ull << (i & 63);
    if (value)
      w |= m;
    else
      w &= ~m;
  }

  std::uint64_t count() const {
    std::uint64_t n = 0;
    const std::uint64_t *w = words();
    for (std::uint64_t i = 0; i < nwords_; ++i) n += std::popcount(w[i]);
    return n;
  }

  bool none() const {
    const std::uint64_t *w = words();
    for (std::uint64_t i = 0; i < nwords_; ++i)
      if (w[i]) return false;
    return true;
  }

  bool all() const { return count() == nbits_; }

  Bitset operator~() const {
    Bitset r(*this);
    std::uint64_t *w = r.words();
    for (std::uint64_t i = 0; i < nwords_; ++i) w[i] = ~w[i];
    r.mask_tail();
    return r;
  }

  Bitset &operator&=(const Bitset &o) {
    std::uint64_t *w = words();
    const std::uint64_t *v = o.words();
    for (std::uint64_t i = 0; i < nwords_; ++i) w[i] &= v[i];
    return *this;
  }

  Bitset &operator|=(const Bitset &o) {
    std::uint64_t *w = words();
    const std::uint64_t *v = o.words();
    for (std::uint64_t i = 0; i < nwords_; ++i) w[i] |= v[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }

  bool is_subset_of(const Bitset &o) const {
    const std::uint64_t *w = words();
    const std::uint64_t *v = o.words();
    for (std::uint64_t i = 0; i < nwords_; ++i)
      if (w[i] & ~v[i]) return false;
    return true;
  }

  bool operator==(const Bitset &o) const {
    if (nbits_ != o.nbits_) return false;
    const std::uint64_t *w = words();
    const std::uint64_t *v = o.words();
    for (std::uint64_t i = 0; i < nwords_; ++i)
      if (w[i] != v[i]) return false;
    return true;
  }

  // Index of the first set bit at or after `from`, or size() if none.
  std::uint64_t find_next(std::uint64_t from) const {
    if (from >= nbits_) return nbits_;
    const std::uint64_t *w = words();
    std::uint64_t wi = from >> 6;
    std::uint64_t cur = w[wi] & (~0ull << (from & 63));
    while (true) {
      if (cur) return (wi << 6) + std::countr_zero(cur);
      if (++wi >= nwords_) return nbits_;
      cur = w[wi];
    }
  }

 private:
  static constexpr std::uint64_t kInlineWords = 2;

  std::uint64_t *words() { return heap_.empty() ? inline_ : heap_.data(); }
  const std::uint64_t *words() const {
    return heap_.empty() ? inline_ : heap_.data();
  }

  void mask_tail() {
    std::uint64_t rem = nbits_ & 63;
    if (nwords_ > 0 && rem != 0) words()[nwords_ - 1] &= (~0ull >> (64 - rem));
  }

  std::uint64_t nbits_;
  std::uint64_t nwords_;
  std::uint64_t inline_[kInlineWords];
  std::vector<std::uint64_t> heap_;
};

}  // namespace hrc

#endif  // HRC_BITSET_HPP
