#include "bruhat/shortcut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "bruhat/errors.hpp"
#include "bruhat/hcd.hpp"

namespace bruhat {

std::vector<Shortcut> shortcuts_by_paths(const Interval& iv, const Permutation& z) {
  if (!iv.contains(z)) throw ElementOutsideInterval("shortcuts_by_paths: z outside [u,v]");
  const auto& G = *iv.group();
  const Bitset zv = G.upset(G.index_of(z)) & G.downset(iv.v_index());
  const auto du = distances_from(G, iv.u_index());

  std::vector<int> zv_idx;
  zv.for_each([&](int i) { zv_idx.push_back(i); });

  std::vector<Shortcut> out;
  for (int p : zv_idx) {
    // p is a shortcut iff no other element of [z,v] lies on a geodesic from
    // u to p, i.e. no x != p in [z,v] with d(u,x) + d(x,p) = d(u,p).
    const auto dp = distances_to(G, p);
    bool shortcut = true;
    for (int x : zv_idx) {
      if (x == p) continue;
      if (du[static_cast<std::size_t>(x)] < 0 || dp[static_cast<std::size_t>(x)] < 0) continue;
      if (du[static_cast<std::size_t>(x)] + dp[static_cast<std::size_t>(x)] == du[static_cast<std::size_t>(p)]) {
        shortcut = false;
        break;
      }
    }
    if (shortcut) out.push_back({G.element(p), du[static_cast<std::size_t>(p)]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Chains anchored at their first element: all value- and position-increasing
// extensions below the given bounds. Every prefix is itself a chain.
void forward_chains(const Permutation& w, int pos0, int pos_limit, int val_limit,
                    std::vector<std::vector<int>>& out) {
  // The anchor itself must satisfy the position and value bounds; it can
  // fail them when w is not below v or when the anchored value sits right
  // of the limit.
  if (pos0 >= pos_limit || w(pos0) >= val_limit) return;
  std::vector<int> chain{w(pos0)};
  out.push_back(chain);
  auto rec = [&](auto&& self, int pos, int val) -> void {
    for (int q = pos + 1; q < pos_limit; ++q) {
      if (w(q) > val && w(q) < val_limit) {
        chain.push_back(w(q));
        out.push_back(chain);
        self(self, q, w(q));
        chain.pop_back();
      }
    }
  };
  rec(rec, pos0, w(pos0));
}

// Chains anchored at their last element: ascending-value subsequences of the
// admissible middle positions, with the anchor value appended.
void backward_chains(const Permutation& w, int pos_lo, int pos_e, int val_lo,
                     std::vector<std::vector<int>>& out) {
  const int val_e = w(pos_e);
  if (pos_lo >= pos_e || val_e <= val_lo) return;  // anchor violates its own chain bounds
  std::vector<int> mids;
  for (int q = pos_lo + 1; q < pos_e; ++q)
    if (w(q) > val_lo && w(q) < val_e) mids.push_back(w(q));
  std::vector<int> chain;
  auto emit = [&]() {
    std::vector<int> full = chain;
    full.push_back(val_e);
    out.push_back(std::move(full));
  };
  emit();
  auto rec = [&](auto&& self, std::size_t from, int val) -> void {
    for (std::size_t i = from; i < mids.size(); ++i) {
      if (mids[i] > val) {
        chain.push_back(mids[i]);
        emit();
        self(self, i + 1, mids[i]);
        chain.pop_back();
      }
    }
  };
  rec(rec, 0, val_lo);
}

}  // namespace

std::vector<Cycle> standard_shortcut_cycles(const Permutation& w, const Permutation& v, StandardKind kind) {
  detail::require_same_rank(w, v, "standard_shortcut_cycles");
  const int n = w.rank();
  std::vector<Cycle> out;
  std::vector<std::vector<int>> chains;

  switch (kind) {
    case StandardKind::Zn: {
      // (n, a_k, ..., a_1) w with w-positions v^{-1}(n) = pos(a_1) < ... <
      // pos(a_k) < pos(n) and values a_1 < ... < a_k < n.
      const int pos0 = v.position_of(n);
      if (pos0 == w.position_of(n)) {
        out.emplace_back(n);
        return out;
      }
      forward_chains(w, pos0, w.position_of(n), n, chains);
      for (auto& c : chains) {
        std::vector<int> entries{n};
        entries.insert(entries.end(), c.rbegin(), c.rend());
        out.emplace_back(n, std::move(entries));
      }
      break;
    }
    case StandardKind::Z1: {
      // (1, b_1, ..., b_h) w with w-positions pos(1) < pos(b_1) < ... <
      // pos(b_h) = v^{-1}(1) and values 1 < b_1 < ... < b_h.
      const int pos_e = v.position_of(1);
      if (pos_e == w.position_of(1)) {
        out.emplace_back(n);
        return out;
      }
      backward_chains(w, w.position_of(1), pos_e, 1, chains);
      for (auto& c : chains) {
        std::vector<int> entries{1};
        entries.insert(entries.end(), c.begin(), c.end());
        out.emplace_back(n, std::move(entries));
      }
      break;
    }
    case StandardKind::ZupN: {
      // (alpha, a_1, ..., a_k) w, alpha = v(n), with w-positions pos(alpha) <
      // pos(a_1) < ... < pos(a_k) = n and values alpha < a_1 < ... < a_k.
      const int alpha = v(n);
      if (w(n) == alpha) {
        out.emplace_back(n);
        return out;
      }
      backward_chains(w, w.position_of(alpha), n, alpha, chains);
      for (auto& c : chains) {
        std::vector<int> entries{alpha};
        entries.insert(entries.end(), c.begin(), c.end());
        out.emplace_back(n, std::move(entries));
      }
      break;
    }
    case StandardKind::Zup1: {
      // (beta, a_k, ..., a_1) w, beta = v(1), with w-positions 1 = pos(a_1) <
      // ... < pos(a_k) < pos(beta) and values a_1 < ... < a_k < beta.
      const int beta = v(1);
      if (w(1) == beta) {
        out.emplace_back(n);
        return out;
      }
      forward_chains(w, 1, w.position_of(beta), beta, chains);
      for (auto& c : chains) {
        std::vector<int> entries{beta};
        entries.insert(entries.end(), c.rbegin(), c.rend());
        out.emplace_back(n, std::move(entries));
      }
      break;
    }
  }
  return out;
}

std::vector<Shortcut> shortcuts_standard(const Interval& iv, StandardKind kind) {
  const auto cycles = standard_shortcut_cycles(iv.u(), iv.v(), kind);
  std::vector<Shortcut> out;
  out.reserve(cycles.size());
  for (const Cycle& c : cycles) {
    const int dist = c.is_identity() ? 0 : static_cast<int>(c.entries().size()) - 1;
    Permutation p = compose(cycle_to_perm(c), iv.u());
    // Shortcut sets live inside [z,v]; chains whose product climbs past v
    // encode no shortcut of this interval.
    if (!bruhat_leq(p, iv.v())) continue;
    out.push_back({std::move(p), dist});
  }
  std::sort(out.begin(), out.end());
  return out;
}

DSMultiset::DSMultiset(std::vector<std::pair<int, Permutation>> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

std::string DSMultiset::json() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  std::size_t i = 0;
  while (i < entries_.size()) {
    std::size_t j = i;
    while (j < entries_.size() && entries_[j] == entries_[i]) ++j;
    if (!first) os << ',';
    first = false;
    os << "{\"degree\":" << entries_[i].first << ",\"perm\":\"" << entries_[i].second.str()
       << "\",\"multiplicity\":" << (j - i) << '}';
    i = j;
  }
  os << ']';
  return os.str();
}

namespace {

// Shared computation for DS multisets over one interval; memoizes the
// shortcut sets of the sub-intervals [p,v], which repeat across pairs.
struct DsEngine {
  const Interval& iv;
  std::map<int, std::vector<Shortcut>> top;                      // z index -> shortcuts
  std::map<std::pair<int, int>, std::vector<Shortcut>> sub;      // (p, join) -> shortcuts

  explicit DsEngine(const Interval& interval) : iv(interval) {}

  const std::vector<Shortcut>& top_shortcuts(const Permutation& z) {
    const int zi = iv.group()->index_of(z);
    auto it = top.find(zi);
    if (it == top.end()) it = top.emplace(zi, shortcuts_by_paths(iv, z)).first;
    return it->second;
  }

  const std::vector<Shortcut>& sub_shortcuts(const Permutation& p, const Permutation& j) {
    const auto key = std::make_pair(iv.group()->index_of(p), iv.group()->index_of(j));
    auto it = sub.find(key);
    if (it == sub.end()) it = sub.emplace(key, shortcuts_by_paths(Interval(p, iv.v()), j)).first;
    return it->second;
  }

  DSMultiset ds(const Permutation& z, const Permutation& zprime) {
    std::vector<std::pair<int, Permutation>> entries;
    for (const Shortcut& s : top_shortcuts(z)) {
      const Permutation j = join(iv, zprime, s.p);
      for (const Shortcut& b : sub_shortcuts(s.p, j)) entries.emplace_back(s.dist + b.dist, b.p);
    }
    return DSMultiset(std::move(entries));
  }
};

}  // namespace

DSMultiset ds_multiset(const Interval& iv, const Permutation& z, const Permutation& zprime) {
  DsEngine engine(iv);
  return engine.ds(z, zprime);
}

bool ds_symmetric(const Interval& iv, const Permutation& z, const Permutation& zprime) {
  DsEngine engine(iv);
  return engine.ds(z, zprime) == engine.ds(zprime, z);
}

DsAnalysis analyze_ds_symmetry(const Interval& iv) {
  DsAnalysis result;
  result.amazing = enumerate_amazing(iv);
  const std::size_t m = result.amazing.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  DsEngine engine(iv);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (engine.ds(result.amazing[i], result.amazing[j]) == engine.ds(result.amazing[j], result.amazing[i]))
        parent[find(i)] = find(j);
      else
        result.asymmetric_pairs.emplace_back(result.amazing[i], result.amazing[j]);
    }

  std::map<std::size_t, std::vector<Permutation>> buckets;
  for (std::size_t i = 0; i < m; ++i) buckets[find(i)].push_back(result.amazing[i]);
  for (auto& [root, members] : buckets) result.classes.push_back(std::move(members));
  // Members inherit the (length, window) order of enumerate_amazing; order
  // classes by their first member.
  std::sort(result.classes.begin(), result.classes.end(), [](const auto& a, const auto& b) {
    const auto key = [](const std::vector<Permutation>& c) { return std::make_pair(length(c.front()), c.front()); };
    return key(a) < key(b);
  });
  return result;
}

std::vector<std::vector<Permutation>> equivalence_classes(const Interval& iv) {
  return analyze_ds_symmetry(iv).classes;
}

}  // namespace bruhat
