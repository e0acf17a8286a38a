#ifndef BRUHAT_RPOLY_HPP
#define BRUHAT_RPOLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bruhat/perm.hpp"

namespace bruhat {

// Kazhdan-Lusztig R-tilde polynomial as a dense nonnegative-integer
// coefficient vector; index = power of q, trailing zeros trimmed.
class RPoly {
 public:
  RPoly() = default;  // zero

  static RPoly zero() { return RPoly(); }
  static RPoly one() { return from_coeffs({1}); }
  static RPoly q() { return from_coeffs({0, 1}); }
  static RPoly from_coeffs(std::vector<long long> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0;
  }
  const std::vector<long long>& coeffs() const { return c_; }

  RPoly& operator+=(const RPoly& o);
  friend RPoly operator+(RPoly a, const RPoly& b) {
    a += b;
    return a;
  }
  // Multiplication by q^k.
  RPoly shifted(int k) const;

  friend bool operator==(const RPoly&, const RPoly&) = default;

  // Monomial form, e.g. "q^3 + q", "2q^2 + 1", "0".
  std::string str() const;
  // Coefficient-list form, e.g. "[0,1,0,1]".
  std::string coeff_list() const;

 private:
  std::vector<long long> c_;
};

enum class DescentPolicy { SmallestIndex, LargestIndex };

// Memoized R-tilde computation over one descent policy. The standard
// recursion on a right descent s of v:
//   u > us :  R(u,v) = R(us,vs)
//   u < us :  R(u,v) = R(us,vs) + q R(u,vs)
// with R(u,u) = 1 and R(u,v) = 0 when u is not below v. Results are
// policy-independent; the policy knob exists for cross-checking.
class RTilde {
 public:
  explicit RTilde(DescentPolicy policy = DescentPolicy::SmallestIndex) : policy_(policy) {}

  const RPoly& operator()(const Permutation& u, const Permutation& v);

  std::size_t cache_size() const { return memo_.size(); }

 private:
  DescentPolicy policy_;
  std::unordered_map<std::uint64_t, RPoly> memo_;
};

// Convenience wrapper with a fresh cache per call.
RPoly rtilde(const Permutation& u, const Permutation& v);

// Sum_p q^{d(u,p)} R(p,v) over the supplied shortcut set (p, d(u,p)).
// Throws ElementOutsideInterval if some p is not in [z,v].
RPoly rtilde_via_shortcuts(const Permutation& u, const Permutation& v, const Permutation& z,
                           std::span<const std::pair<Permutation, int>> shortcuts);

// Whether rtilde(u,v) equals the shortcut sum over the path-definition
// shortcut set of z. Throws ElementOutsideInterval if z is not in [u,v].
bool is_r_element(const Permutation& u, const Permutation& v, const Permutation& z);

}  // namespace bruhat

#endif  // BRUHAT_RPOLY_HPP
