#include "bruhat/order.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

constexpr int kMaxRank = 7;

std::vector<std::pair<int, int>> all_transpositions(int n) {
  std::vector<std::pair<int, int>> ts;
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b <= n; ++b) ts.emplace_back(a, b);
  return ts;
}

// Window of t * x for the transposition t = (a b): swaps the values a and b.
std::vector<int> left_transpose(const std::vector<int>& win, int a, int b) {
  std::vector<int> w = win;
  for (int& v : w) {
    if (v == a)
      v = b;
    else if (v == b)
      v = a;
  }
  return w;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  std::vector<int> win(static_cast<std::size_t>(n));
  std::iota(win.begin(), win.end(), 1);
  do {
    elements_.emplace_back(win);
  } while (std::next_permutation(win.begin(), win.end()));

  const int N = order();
  lengths_.resize(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) lengths_[static_cast<std::size_t>(i)] = length(elements_[static_cast<std::size_t>(i)]);

  const auto ts = all_transpositions(n);
  std::vector<std::vector<int>> up(static_cast<std::size_t>(N)), down(static_cast<std::size_t>(N));
  up_bits_.assign(static_cast<std::size_t>(N), Bitset(static_cast<std::size_t>(N)));
  down_bits_.assign(static_cast<std::size_t>(N), Bitset(static_cast<std::size_t>(N)));
  for (int i = 0; i < N; ++i) {
    for (const auto& [a, b] : ts) {
      const int j = index_of(Permutation(left_transpose(elements_[static_cast<std::size_t>(i)].window(), a, b)));
      if (lengths_[static_cast<std::size_t>(j)] > lengths_[static_cast<std::size_t>(i)]) {
        up[static_cast<std::size_t>(i)].push_back(j);
        up_bits_[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
      } else {
        down[static_cast<std::size_t>(i)].push_back(j);
        down_bits_[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
      }
    }
  }
  up_off_.assign(static_cast<std::size_t>(N) + 1, 0);
  down_off_.assign(static_cast<std::size_t>(N) + 1, 0);
  for (int i = 0; i < N; ++i) {
    up_off_[static_cast<std::size_t>(i) + 1] = up_off_[static_cast<std::size_t>(i)] + static_cast<int>(up[static_cast<std::size_t>(i)].size());
    down_off_[static_cast<std::size_t>(i) + 1] = down_off_[static_cast<std::size_t>(i)] + static_cast<int>(down[static_cast<std::size_t>(i)].size());
  }
  up_flat_.reserve(static_cast<std::size_t>(up_off_.back()));
  down_flat_.reserve(static_cast<std::size_t>(down_off_.back()));
  for (int i = 0; i < N; ++i) {
    up_flat_.insert(up_flat_.end(), up[static_cast<std::size_t>(i)].begin(), up[static_cast<std::size_t>(i)].end());
    down_flat_.insert(down_flat_.end(), down[static_cast<std::size_t>(i)].begin(), down[static_cast<std::size_t>(i)].end());
  }

  // Bruhat order via cover closure: covers are the up-edges of length
  // difference exactly 1. Process by decreasing length.
  std::vector<int> by_len(static_cast<std::size_t>(N));
  std::iota(by_len.begin(), by_len.end(), 0);
  std::sort(by_len.begin(), by_len.end(), [&](int a, int b) {
    return lengths_[static_cast<std::size_t>(a)] > lengths_[static_cast<std::size_t>(b)];
  });
  upset_.assign(static_cast<std::size_t>(N), Bitset(static_cast<std::size_t>(N)));
  for (int idx : by_len) {
    auto& bits = upset_[static_cast<std::size_t>(idx)];
    bits.set(static_cast<std::size_t>(idx));
    for (int j : up[static_cast<std::size_t>(idx)])
      if (lengths_[static_cast<std::size_t>(j)] == lengths_[static_cast<std::size_t>(idx)] + 1)
        bits |= upset_[static_cast<std::size_t>(j)];
  }
  downset_.assign(static_cast<std::size_t>(N), Bitset(static_cast<std::size_t>(N)));
  for (int x = 0; x < N; ++x)
    upset_[static_cast<std::size_t>(x)].for_each([&](int y) { downset_[static_cast<std::size_t>(y)].set(static_cast<std::size_t>(x)); });

  inverse_.resize(static_cast<std::size_t>(N));
  conj_w0_.resize(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    inverse_[static_cast<std::size_t>(i)] = index_of(inverse(elements_[static_cast<std::size_t>(i)]));
    conj_w0_[static_cast<std::size_t>(i)] = index_of(conjugate_w0(elements_[static_cast<std::size_t>(i)]));
  }
}

std::shared_ptr<const SymmetricGroup> SymmetricGroup::get(int n) {
  if (n < 1 || n > kMaxRank) {
    std::ostringstream os;
    os << "rank " << n << " outside supported range 1.." << kMaxRank;
    throw Error(os.str());
  }
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SymmetricGroup>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[n];
  if (!slot) slot = std::shared_ptr<const SymmetricGroup>(new SymmetricGroup(n));
  return slot;
}

int SymmetricGroup::index_of(const Permutation& p) const {
  // Lexicographic rank via the Lehmer code.
  const int n = p.rank();
  int idx = 0;
  int fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  for (int i = 1; i <= n; ++i) {
    fact /= (n - i + 1);
    int smaller_later = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller_later;
    idx += smaller_later * fact;
  }
  return idx;
}

std::span<const int> SymmetricGroup::up_neighbors(int idx) const {
  return {up_flat_.data() + up_off_[static_cast<std::size_t>(idx)],
          static_cast<std::size_t>(up_off_[static_cast<std::size_t>(idx) + 1] - up_off_[static_cast<std::size_t>(idx)])};
}

std::span<const int> SymmetricGroup::down_neighbors(int idx) const {
  return {down_flat_.data() + down_off_[static_cast<std::size_t>(idx)],
          static_cast<std::size_t>(down_off_[static_cast<std::size_t>(idx) + 1] - down_off_[static_cast<std::size_t>(idx)])};
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  detail::require_same_rank(x, y, "bruhat_leq");
  const int n = x.rank();
  // Dominance: for every prefix i, the multiset of x-values in it is
  // dominated entrywise (after sorting descending) by the y-values.
  for (int j = 2; j <= n; ++j) {
    int cx = 0, cy = 0;
    for (int i = 1; i <= n; ++i) {
      if (x(i) >= j) ++cx;
      if (y(i) >= j) ++cy;
      if (cx > cy) return false;
    }
  }
  return true;
}

Interval::Interval(const Permutation& u, const Permutation& v) : u_(u), v_(v) {
  detail::require_same_rank(u, v, "interval");
  if (!bruhat_leq(u, v)) throw NotComparable("interval endpoints: u is not below v");
  group_ = SymmetricGroup::get(u.rank());
  u_idx_ = group_->index_of(u);
  v_idx_ = group_->index_of(v);
  members_ = group_->upset(u_idx_) & group_->downset(v_idx_);
  std::vector<int> idxs;
  members_.for_each([&](int i) { idxs.push_back(i); });
  std::sort(idxs.begin(), idxs.end(), [&](int a, int b) {
    if (group_->length_of(a) != group_->length_of(b)) return group_->length_of(a) < group_->length_of(b);
    return a < b;  // group indices are lexicographic window ranks
  });
  elems_.reserve(idxs.size());
  for (int i : idxs) elems_.push_back(group_->element(i));
}

bool Interval::contains(const Permutation& x) const {
  if (x.rank() != rank()) return false;
  return members_.test(static_cast<std::size_t>(group_->index_of(x)));
}

std::vector<Permutation> Interval::up_edges(const Permutation& x) const {
  std::vector<Permutation> out;
  const int xi = group_->index_of(x);
  for (int y : group_->up_neighbors(xi))
    if (members_.test(static_cast<std::size_t>(y))) out.push_back(group_->element(y));
  std::sort(out.begin(), out.end());
  return out;
}

Interval interval(const Permutation& u, const Permutation& v) { return Interval(u, v); }

std::vector<BruhatEdge> bruhat_edges_into(const Permutation& p, std::span<const Permutation> domain) {
  std::vector<BruhatEdge> edges;
  const int lp = length(p);
  for (const Permutation& x : domain) {
    detail::require_same_rank(x, p, "bruhat_edges_into");
    if (length(x) < lp && differ_by_transposition(x, p)) edges.push_back({x, p});
  }
  std::sort(edges.begin(), edges.end(), [](const BruhatEdge& a, const BruhatEdge& b) { return a.source < b.source; });
  return edges;
}

std::vector<int> distances_from(const SymmetricGroup& G, int from) {
  std::vector<int> dist(static_cast<std::size_t>(G.order()), -1);
  dist[static_cast<std::size_t>(from)] = 0;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : G.up_neighbors(x))
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

std::vector<int> distances_to(const SymmetricGroup& G, int to) {
  std::vector<int> dist(static_cast<std::size_t>(G.order()), -1);
  dist[static_cast<std::size_t>(to)] = 0;
  std::deque<int> queue{to};
  while (!queue.empty()) {
    const int y = queue.front();
    queue.pop_front();
    for (int x : G.down_neighbors(y))
      if (dist[static_cast<std::size_t>(x)] < 0) {
        dist[static_cast<std::size_t>(x)] = dist[static_cast<std::size_t>(y)] + 1;
        queue.push_back(x);
      }
  }
  return dist;
}

int distance(const Permutation& u, const Permutation& p) {
  detail::require_same_rank(u, p, "distance");
  if (!bruhat_leq(u, p)) throw NotComparable("distance: u is not below p");
  auto G = SymmetricGroup::get(u.rank());
  const auto dist = distances_from(*G, G->index_of(u));
  return dist[static_cast<std::size_t>(G->index_of(p))];
}

std::vector<BruhatPath> geodesics(const Permutation& u, const Permutation& p) {
  detail::require_same_rank(u, p, "geodesics");
  if (!bruhat_leq(u, p)) throw NotComparable("geodesics: u is not below p");
  auto G = SymmetricGroup::get(u.rank());
  const int ui = G->index_of(u), pi = G->index_of(p);
  const auto du = distances_from(*G, ui);
  const auto dp = distances_to(*G, pi);
  const int D = du[static_cast<std::size_t>(pi)];

  std::vector<BruhatPath> out;
  std::vector<int> stack{ui};
  // Depth-first over the layered DAG of geodesic vertices.
  auto rec = [&](auto&& self, int x) -> void {
    if (x == pi) {
      BruhatPath path;
      for (int i : stack) path.vertices.push_back(G->element(i));
      out.push_back(std::move(path));
      return;
    }
    for (int y : G->up_neighbors(x)) {
      if (dp[static_cast<std::size_t>(y)] < 0) continue;
      if (du[static_cast<std::size_t>(x)] + 1 + dp[static_cast<std::size_t>(y)] != D) continue;
      stack.push_back(y);
      self(self, y);
      stack.pop_back();
    }
  };
  rec(rec, ui);
  return out;
}

Permutation poset_min(std::span<const Permutation> xs) {
  if (xs.empty()) throw NoMinimum("poset_min of empty set");
  std::size_t best = 0;
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (length(xs[i]) < length(xs[best])) best = i;
  for (const Permutation& y : xs)
    if (!bruhat_leq(xs[best], y)) throw NoMinimum("set has no unique minimum");
  return xs[best];
}

namespace {

// Parabolic subgroup W_{S \ {s_cut}} generated by all simple transpositions
// except s_cut, materialized by closure from the generators.
std::unordered_set<Permutation, PermHash> parabolic_subgroup(int n, int cut) {
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) {
    if (i == cut) continue;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(i)]);
    gens.emplace_back(std::move(w));
  }
  std::unordered_set<Permutation, PermHash> seen{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    Permutation w = queue.front();
    queue.pop_front();
    for (const Permutation& s : gens) {
      Permutation next = compose(s, w);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

}  // namespace

const char* standard_kind_name(StandardKind kind) {
  switch (kind) {
    case StandardKind::Zn: return "z_n";
    case StandardKind::Z1: return "z_1";
    case StandardKind::ZupN: return "z^n";
    case StandardKind::Zup1: return "z^1";
  }
  return "?";
}

Permutation standard_hcd(const Interval& iv, StandardKind kind) {
  const int n = iv.rank();
  const int cut = (kind == StandardKind::Zn || kind == StandardKind::ZupN) ? n - 1 : 1;
  const bool right_coset = (kind == StandardKind::ZupN || kind == StandardKind::Zup1);
  if (n == 1) return iv.v();
  const auto WJ = parabolic_subgroup(n, cut);
  const Permutation v_inv = inverse(iv.v());
  std::vector<Permutation> hits;
  for (const Permutation& x : iv.elements()) {
    const Permutation rep = right_coset ? compose(v_inv, x) : compose(x, v_inv);
    if (WJ.count(rep)) hits.push_back(x);
  }
  return poset_min(hits);
}

Permutation standard_hcd(const Permutation& u, const Permutation& v, StandardKind kind) {
  return standard_hcd(Interval(u, v), kind);
}

}  // namespace bruhat
