#include "bruhat/perm.hpp"

#include <algorithm>
#include <sstream>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

std::vector<int> invert_window(const std::vector<int>& win) {
  std::vector<int> inv(win.size());
  for (std::size_t i = 0; i < win.size(); ++i) inv[static_cast<std::size_t>(win[i]) - 1] = static_cast<int>(i) + 1;
  return inv;
}

}  // namespace

Permutation::Permutation(std::vector<int> window) {
  const int n = static_cast<int>(window.size());
  if (n < 1) throw ParseError("permutation window must have n >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : window) {
    if (v < 1 || v > n) throw ParseError("window value out of range 1..n");
    if (seen[static_cast<std::size_t>(v) - 1]) throw ParseError("window repeats a value");
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
  win_ = std::move(window);
  inv_ = invert_window(win_);
}

Permutation::Permutation(unchecked_t, std::vector<int> window) : win_(std::move(window)), inv_(invert_window(win_)) {}

Permutation Permutation::identity(int n) {
  if (n < 1) throw ParseError("rank must be >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(unchecked_t{}, std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty()) throw ParseError("empty token in permutation text");
    int value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError("non-digit in permutation text");
      value = value * 10 + (c - '0');
      if (value > 1000) throw ParseError("permutation value too large");
    }
    w.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= rank(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < win_.size(); ++i) {
    if (i) os << ',';
    os << win_[i];
  }
  return os.str();
}

namespace detail {
void require_same_rank(const Permutation& a, const Permutation& b, const char* op) {
  if (a.rank() != b.rank()) {
    std::ostringstream os;
    os << op << ": rank mismatch (" << a.rank() << " vs " << b.rank() << ")";
    throw RankMismatch(os.str());
  }
}
}  // namespace detail

Permutation compose(const Permutation& u, const Permutation& v) {
  detail::require_same_rank(u, v, "compose");
  std::vector<int> w(u.win_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = u.win_[static_cast<std::size_t>(v.win_[i]) - 1];
  return Permutation(Permutation::unchecked_t{}, std::move(w));
}

Permutation inverse(const Permutation& u) {
  std::vector<int> inv = u.inv_;
  return Permutation(Permutation::unchecked_t{}, std::move(inv));
}

int length(const Permutation& u) {
  int count = 0;
  const int n = u.rank();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (u(i) > u(j)) ++count;
  return count;
}

Permutation conjugate_w0(const Permutation& u) {
  const int n = u.rank();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = n + 1 - u(n + 1 - i);
  return Permutation(Permutation::unchecked_t{}, std::move(w));
}

Permutation longest_element(int n) {
  if (n < 1) throw ParseError("rank must be >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

bool differ_by_transposition(const Permutation& x, const Permutation& y) {
  detail::require_same_rank(x, y, "differ_by_transposition");
  int diff = 0;
  for (int i = 1; i <= x.rank(); ++i)
    if (x(i) != y(i) && ++diff > 2) return false;
  return diff == 2;
}

Cycle::Cycle(int n, std::vector<int> entries) : n_(n) {
  if (n < 1) throw ParseError("cycle rank must be >= 1");
  if (entries.size() == 1) entries.clear();  // a 1-cycle is the identity
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : entries) {
    if (v < 1 || v > n) throw ParseError("cycle entry out of range 1..n");
    if (seen[static_cast<std::size_t>(v) - 1]) throw ParseError("cycle repeats an entry");
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
  entries_ = std::move(entries);
}

Cycle Cycle::parse(int n, std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw ParseError("cycle text must be parenthesized");
  std::string_view body = text.substr(1, text.size() - 2);
  if (body.empty()) return Cycle(n);
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty()) throw ParseError("empty token in cycle text");
    int value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError("non-digit in cycle text");
      value = value * 10 + (c - '0');
      if (value > 1000) throw ParseError("cycle value too large");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Cycle(n, std::move(entries));
}

std::vector<int> Cycle::support() const {
  std::vector<int> s = entries_;
  std::sort(s.begin(), s.end());
  return s;
}

int Cycle::image_of(int value) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] == value) return entries_[(i + 1) % entries_.size()];
  return value;
}

std::string Cycle::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

bool Cycle::operator==(const Cycle& o) const {
  if (n_ != o.n_ || entries_.size() != o.entries_.size()) return false;
  if (entries_.empty()) return true;
  auto it = std::find(o.entries_.begin(), o.entries_.end(), entries_[0]);
  if (it == o.entries_.end()) return false;
  std::size_t shift = static_cast<std::size_t>(it - o.entries_.begin());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != o.entries_[(shift + i) % entries_.size()]) return false;
  return true;
}

Permutation cycle_to_perm(const Cycle& c) {
  if (c.rank() < 1) throw ParseError("cycle has no rank");
  std::vector<int> w(static_cast<std::size_t>(c.rank()));
  for (int i = 1; i <= c.rank(); ++i) w[static_cast<std::size_t>(i) - 1] = i;
  const auto& e = c.entries();
  for (std::size_t i = 0; i < e.size(); ++i) w[static_cast<std::size_t>(e[i]) - 1] = e[(i + 1) % e.size()];
  return Permutation(std::move(w));
}

Cycle conjugate_cycle_w0(const Cycle& c) {
  std::vector<int> e = c.entries();
  for (int& v : e) v = c.rank() + 1 - v;
  return Cycle(c.rank(), std::move(e));
}

}  // namespace bruhat
