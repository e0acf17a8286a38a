#include "bruhat/rpoly.hpp"

#include <algorithm>
#include <sstream>

#include "bruhat/errors.hpp"
#include "bruhat/order.hpp"
#include "bruhat/shortcut.hpp"

namespace bruhat {

RPoly RPoly::from_coeffs(std::vector<long long> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  for (long long c : coeffs)
    if (c < 0) throw Error("RPoly coefficients must be nonnegative");
  RPoly p;
  p.c_ = std::move(coeffs);
  return p;
}

RPoly& RPoly::operator+=(const RPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RPoly RPoly::shifted(int k) const {
  if (is_zero()) return RPoly();
  RPoly p;
  p.c_.assign(static_cast<std::size_t>(k), 0);
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

std::string RPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const long long c = coeff(k);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << 'q';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::string RPoly::coeff_list() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ']';
  return os.str();
}

namespace {

constexpr int kPackRank = 7;  // 3-bit digits, two windows in 42 bits

std::uint64_t pack_pair(const Permutation& u, const Permutation& v) {
  std::uint64_t key = 0;
  for (int i = 1; i <= u.rank(); ++i) key = (key << 3) | static_cast<std::uint64_t>(u(i) - 1);
  for (int i = 1; i <= v.rank(); ++i) key = (key << 3) | static_cast<std::uint64_t>(v(i) - 1);
  return key;
}

// Right descent of v: a position i with v(i) > v(i+1).
int pick_descent(const Permutation& v, DescentPolicy policy) {
  const int n = v.rank();
  if (policy == DescentPolicy::SmallestIndex) {
    for (int i = 1; i < n; ++i)
      if (v(i) > v(i + 1)) return i;
  } else {
    for (int i = n - 1; i >= 1; --i)
      if (v(i) > v(i + 1)) return i;
  }
  return 0;
}

Permutation right_multiply_simple(const Permutation& w, int i) {
  std::vector<int> win = w.window();
  std::swap(win[static_cast<std::size_t>(i) - 1], win[static_cast<std::size_t>(i)]);
  return Permutation(std::move(win));
}

}  // namespace

const RPoly& RTilde::operator()(const Permutation& u, const Permutation& v) {
  detail::require_same_rank(u, v, "rtilde");
  if (u.rank() > kPackRank) throw Error("rtilde supports rank <= 7");
  const std::uint64_t key = pack_pair(u, v);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  RPoly result;
  if (u == v) {
    result = RPoly::one();
  } else if (!bruhat_leq(u, v)) {
    result = RPoly::zero();
  } else {
    const int s = pick_descent(v, policy_);
    const Permutation vs = right_multiply_simple(v, s);
    const Permutation us = right_multiply_simple(u, s);
    if (u(s) > u(s + 1)) {
      result = (*this)(us, vs);
    } else {
      result = (*this)(us, vs) + (*this)(u, vs).shifted(1);
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

RPoly rtilde(const Permutation& u, const Permutation& v) {
  RTilde rt;
  return rt(u, v);
}

RPoly rtilde_via_shortcuts(const Permutation& u, const Permutation& v, const Permutation& z,
                           std::span<const std::pair<Permutation, int>> shortcuts) {
  RTilde rt;
  RPoly sum;
  for (const auto& [p, d] : shortcuts) {
    if (!bruhat_leq(z, p) || !bruhat_leq(p, v))
      throw ElementOutsideInterval("shortcut element outside [z,v]");
    sum += rt(p, v).shifted(d);
  }
  return sum;
}

bool is_r_element(const Permutation& u, const Permutation& v, const Permutation& z) {
  if (!bruhat_leq(u, z) || !bruhat_leq(z, v)) throw ElementOutsideInterval("z outside [u,v]");
  Interval iv(u, v);
  const auto sc = shortcuts_by_paths(iv, z);
  std::vector<std::pair<Permutation, int>> pairs;
  pairs.reserve(sc.size());
  for (const auto& s : sc) pairs.emplace_back(s.p, s.dist);
  return rtilde(u, v) == rtilde_via_shortcuts(u, v, z, pairs);
}

}  // namespace bruhat
