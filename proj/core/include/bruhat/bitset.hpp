#ifndef BRUHAT_BITSET_HPP
#define BRUHAT_BITSET_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bruhat {

// Fixed-size bitset sized at runtime. Backs interval membership and
// reachability sets indexed by group element.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }
  void clear() {
    for (auto& w : w_) w = 0;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // *this &= ~o
  Bitset& and_not(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) {
    a &= b;
    return a;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) {
    a |= b;
    return a;
  }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // First set bit at or after `from`, or -1.
  int find_next(std::size_t from) const {
    if (from >= n_) return -1;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (from & 63));
    while (true) {
      if (w) return static_cast<int>((wi << 6) + __builtin_ctzll(w));
      if (++wi == w_.size()) return -1;
      w = w_[wi];
    }
  }
  int find_first() const { return find_next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (int i = find_first(); i >= 0; i = find_next(static_cast<std::size_t>(i) + 1)) f(i);
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace bruhat

#endif  // BRUHAT_BITSET_HPP
