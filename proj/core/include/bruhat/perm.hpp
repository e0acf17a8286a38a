#ifndef BRUHAT_PERM_HPP
#define BRUHAT_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

// Element of S_n in one-line notation. Windows are 1-based: window()[i-1]
// is the image of position i. Immutable after construction.
class Permutation {
 public:
  Permutation() = default;  // rank 0, only useful as a placeholder

  // Validates that `window` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);

  // Parses comma-separated one-line notation, e.g. "3,1,2".
  static Permutation parse(std::string_view text);

  int rank() const { return static_cast<int>(win_.size()); }

  // Image of position i (1-based).
  int operator()(int i) const { return win_[static_cast<std::size_t>(i) - 1]; }

  // Position of `value` in the window, i.e. u^{-1}(value).
  int position_of(int value) const { return inv_[static_cast<std::size_t>(value) - 1]; }

  const std::vector<int>& window() const { return win_; }

  bool is_identity() const;

  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.win_ == b.win_; }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.win_ <=> b.win_;
  }

 private:
  struct unchecked_t {};
  Permutation(unchecked_t, std::vector<int> window);

  std::vector<int> win_;
  std::vector<int> inv_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate_w0(const Permutation&);
};

// (u o v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& u);

// Number of inversions, i.e. the Coxeter length.
int length(const Permutation& u);

// w0 u w0, where w0 is the longest element. Window form: i -> n+1-u(n+1-i).
Permutation conjugate_w0(const Permutation& u);

// The longest element (n, n-1, ..., 1).
Permutation longest_element(int n);

// y = t x for a transposition t, i.e. x and y differ in exactly two values.
bool differ_by_transposition(const Permutation& x, const Permutation& y);

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p.window()) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Cyclic permutation given by an ordered list of distinct values; entry i is
// mapped to entry i+1, the last wraps to the first, everything else is fixed.
// The empty cycle is the identity; length-1 cycles are normalized to empty.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(int n) : n_(n) {}
  Cycle(int n, std::vector<int> entries);

  // Parses "(4,2,1)" or "()" at the given rank.
  static Cycle parse(int n, std::string_view text);

  int rank() const { return n_; }
  const std::vector<int>& entries() const { return entries_; }
  bool is_identity() const { return entries_.empty(); }

  // Set of values moved by the cycle, ascending. Empty for the identity.
  std::vector<int> support() const;

  int image_of(int value) const;

  std::string str() const;

  // Equal as functions: same rank and same cyclic word up to rotation.
  bool operator==(const Cycle& o) const;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

Permutation cycle_to_perm(const Cycle& c);

// Entries mapped pointwise by e -> n+1-e; cyclic order preserved.
Cycle conjugate_cycle_w0(const Cycle& c);

namespace detail {
void require_same_rank(const Permutation& a, const Permutation& b, const char* op);
}

}  // namespace bruhat

#endif  // BRUHAT_PERM_HPP
