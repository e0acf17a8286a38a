#include "bruhat/hcd.hpp"

#include <algorithm>
#include <unordered_map>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

std::vector<int> sorted_indices(const SymmetricGroup& G, const Bitset& bits) {
  std::vector<int> out;
  bits.for_each([&](int i) { out.push_back(i); });
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    if (G.length_of(a) != G.length_of(b)) return G.length_of(a) < G.length_of(b);
    return a < b;
  });
  return out;
}

struct SpanKey {
  int n = 0;
  int target = 0;
  std::vector<int> sources;
  bool operator==(const SpanKey&) const = default;
};

struct SpanKeyHash {
  std::size_t operator()(const SpanKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    };
    mix(k.n);
    mix(k.target);
    for (int s : k.sources) mix(s);
    return static_cast<std::size_t>(h);
  }
};

// Embedding counts are pure graph facts keyed by (target, sources); workers
// keep independent caches.
thread_local std::unordered_map<SpanKey, int, SpanKeyHash> span_cache;

int embedding_count_indexed(const SymmetricGroup& G, int target, const std::vector<int>& sources) {
  const int m = static_cast<int>(sources.size());
  if (m <= 1) return 1;

  const int full = (1 << m) - 1;
  std::vector<int> theta(static_cast<std::size_t>(full) + 1, -1);
  theta[static_cast<std::size_t>(full)] = target;
  for (int i = 0; i < m; ++i) theta[static_cast<std::size_t>(full ^ (1 << i))] = sources[static_cast<std::size_t>(i)];

  // Masks needing assignment, processed by decreasing cardinality.
  std::vector<int> todo;
  for (int mask = full - 1; mask >= 0; --mask)
    if (__builtin_popcount(static_cast<unsigned>(mask)) <= m - 2) todo.push_back(mask);
  std::sort(todo.begin(), todo.end(), [](int a, int b) {
    return __builtin_popcount(static_cast<unsigned>(a)) > __builtin_popcount(static_cast<unsigned>(b));
  });

  std::vector<char> used(static_cast<std::size_t>(G.order()), 0);
  used[static_cast<std::size_t>(target)] = 1;
  for (int i = 0; i < m; ++i) used[static_cast<std::size_t>(sources[static_cast<std::size_t>(i)])] = 1;

  int count = 0;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == todo.size()) {
      ++count;
      return;
    }
    const int mask = todo[pos];
    // Candidates: common in-neighbors of all assigned supersets S u {a}.
    Bitset candidates;
    bool first = true;
    for (int i = 0; i < m; ++i) {
      if (mask & (1 << i)) continue;
      const int up = theta[static_cast<std::size_t>(mask | (1 << i))];
      if (first) {
        candidates = G.down_neighbor_bits(up);
        first = false;
      } else {
        candidates &= G.down_neighbor_bits(up);
      }
    }
    candidates.for_each([&](int c) {
      if (used[static_cast<std::size_t>(c)]) return;
      theta[static_cast<std::size_t>(mask)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      self(self, pos + 1);
      used[static_cast<std::size_t>(c)] = 0;
      theta[static_cast<std::size_t>(mask)] = -1;
    });
  };
  rec(rec, 0);
  return count;
}

int embedding_count_cached(const SymmetricGroup& G, int target, std::vector<int> sources) {
  std::sort(sources.begin(), sources.end());
  SpanKey key{G.rank(), target, std::move(sources)};
  auto it = span_cache.find(key);
  if (it != span_cache.end()) return it->second;
  const int count = embedding_count_indexed(G, target, key.sources);
  return span_cache.emplace(std::move(key), count).first->second;
}

// DFS over subsets of `sources` that are Bruhat antichains; returns the first
// subset (size >= 2) that fails to span, or nullopt.
std::optional<std::vector<int>> find_failing_antichain(const SymmetricGroup& G, int target,
                                                       const std::vector<int>& sources) {
  const int m = static_cast<int>(sources.size());
  std::vector<std::vector<char>> comparable(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      comparable[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          G.leq(sources[static_cast<std::size_t>(i)], sources[static_cast<std::size_t>(j)]) ||
          G.leq(sources[static_cast<std::size_t>(j)], sources[static_cast<std::size_t>(i)]);

  std::vector<int> chosen;
  std::optional<std::vector<int>> failure;
  auto rec = [&](auto&& self, int from) -> bool {  // returns true to abort
    if (chosen.size() >= 2) {
      std::vector<int> subset;
      subset.reserve(chosen.size());
      for (int i : chosen) subset.push_back(sources[static_cast<std::size_t>(i)]);
      if (embedding_count_cached(G, target, subset) != 1) {
        failure = std::move(subset);
        return true;
      }
    }
    for (int i = from; i < m; ++i) {
      bool ok = true;
      for (int j : chosen)
        if (comparable[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return failure;
}

std::vector<int> fan_source_indices(const Interval& iv, const EdgeFan& fan) {
  const auto& G = *iv.group();
  const int t = G.index_of(fan.target);
  std::vector<int> srcs;
  srcs.reserve(fan.sources.size());
  for (const Permutation& s : fan.sources) {
    const int si = G.index_of(s);
    if (!G.down_neighbor_bits(t).test(static_cast<std::size_t>(si)))
      throw Error("edge fan source is not an in-neighbor of the target");
    srcs.push_back(si);
  }
  std::sort(srcs.begin(), srcs.end());
  srcs.erase(std::unique(srcs.begin(), srcs.end()), srcs.end());
  return srcs;
}

}  // namespace

bool is_diamond_complete(const Interval& iv, const Permutation& z) {
  if (!iv.contains(z)) throw ElementOutsideInterval("is_diamond_complete: z outside [u,v]");
  const auto& G = *iv.group();
  const Bitset zv = G.upset(G.index_of(z)) & G.downset(iv.v_index());
  Bitset outside = iv.member_bits();
  outside.and_not(zv);
  bool ok = true;
  outside.for_each([&](int x) {
    if (!ok) return;
    Bitset mids = G.up_neighbor_bits(x) & zv;
    std::vector<int> a;
    mids.for_each([&](int i) { a.push_back(i); });
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = i + 1; j < a.size() && ok; ++j) {
        Bitset tops = G.up_neighbor_bits(a[i]) & G.up_neighbor_bits(a[j]);
        tops &= zv;
        if (tops.any()) ok = false;
      }
  });
  return ok;
}

namespace {

std::optional<DiamondWitness> diamond_witness(const Interval& iv, const Permutation& z) {
  const auto& G = *iv.group();
  const Bitset zv = G.upset(G.index_of(z)) & G.downset(iv.v_index());
  Bitset outside = iv.member_bits();
  outside.and_not(zv);
  std::optional<DiamondWitness> w;
  outside.for_each([&](int x) {
    if (w) return;
    Bitset mids = G.up_neighbor_bits(x) & zv;
    std::vector<int> a;
    mids.for_each([&](int i) { a.push_back(i); });
    for (std::size_t i = 0; i < a.size() && !w; ++i)
      for (std::size_t j = i + 1; j < a.size() && !w; ++j) {
        Bitset tops = G.up_neighbor_bits(a[i]) & G.up_neighbor_bits(a[j]);
        tops &= zv;
        const int y = tops.find_first();
        if (y >= 0) w = DiamondWitness{G.element(x), G.element(a[i]), G.element(a[j]), G.element(y)};
      }
  });
  return w;
}

}  // namespace

int hypercube_embedding_count(const Interval& iv, const EdgeFan& fan) {
  const auto srcs = fan_source_indices(iv, fan);
  return embedding_count_cached(*iv.group(), iv.group()->index_of(fan.target), srcs);
}

bool spans_hypercube(const Interval& iv, const EdgeFan& fan) {
  return hypercube_embedding_count(iv, fan) == 1;
}

bool spans_hypercube_cluster(const Interval& iv, const EdgeFan& fan) {
  const auto srcs = fan_source_indices(iv, fan);
  return !find_failing_antichain(*iv.group(), iv.group()->index_of(fan.target), srcs).has_value();
}

HcdReport is_hcd(const Interval& iv, const Permutation& z) {
  if (!iv.contains(z)) throw ElementOutsideInterval("is_hcd: z outside [u,v]");
  const auto& G = *iv.group();
  HcdReport report;
  report.z = z;
  report.diamond_complete = is_diamond_complete(iv, z);
  if (!report.diamond_complete) report.diamond_witness = diamond_witness(iv, z);

  const Bitset zv = G.upset(G.index_of(z)) & G.downset(iv.v_index());
  Bitset outside = iv.member_bits();
  outside.and_not(zv);

  report.cluster_ok = true;
  for (int p : sorted_indices(G, zv)) {
    Bitset src_bits = G.down_neighbor_bits(p) & outside;
    std::vector<int> srcs;
    src_bits.for_each([&](int i) { srcs.push_back(i); });
    auto failure = find_failing_antichain(G, p, srcs);
    if (failure) {
      report.cluster_ok = false;
      ClusterWitness w;
      w.p = G.element(p);
      for (int s : *failure) w.sources.push_back(G.element(s));
      report.cluster_witness = std::move(w);
      break;
    }
  }
  return report;
}

Permutation join(const Interval& iv, const Permutation& z, const Permutation& x) {
  if (!iv.contains(z) || !iv.contains(x)) throw ElementOutsideInterval("join: arguments outside [u,v]");
  const auto& G = *iv.group();
  Bitset meet = G.upset(G.index_of(z)) & G.upset(G.index_of(x));
  meet &= G.downset(iv.v_index());
  int best = -1;
  meet.for_each([&](int i) {
    if (best < 0 || G.length_of(i) < G.length_of(best)) best = i;
  });
  if (best < 0) throw NoMinimum("join: empty intersection");
  bool minimal = true;
  meet.for_each([&](int i) {
    if (!G.leq(best, i)) minimal = false;
  });
  if (!minimal) throw NoMinimum("join: intersection has no unique minimum");
  return G.element(best);
}

namespace {

bool amazing_one_level(const Interval& iv, const Permutation& z) {
  if (!is_hcd(iv, z).ok()) return false;
  for (const Permutation& x : iv.elements()) {
    if (x == iv.u()) continue;  // its join is z, checked above
    Permutation j{};
    try {
      j = join(iv, z, x);
    } catch (const NoMinimum&) {
      return false;
    }
    if (!is_hcd(Interval(x, iv.v()), j).ok()) return false;
  }
  return true;
}

struct StrictContext {
  const SymmetricGroup& G;
  Permutation v;
  std::unordered_map<std::uint64_t, bool> memo;  // (x_idx, z_idx) -> verified
};

bool amazing_strict(StrictContext& ctx, const Permutation& x, const Permutation& z) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(ctx.G.index_of(x)) << 20) | static_cast<std::uint64_t>(ctx.G.index_of(z));
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;
  // Recursion is well-founded: it only descends to strictly higher x.

  Interval iv(x, ctx.v);
  bool ok = is_hcd(iv, z).ok();
  if (ok) {
    for (const Permutation& y : iv.elements()) {
      if (y == x) continue;
      Permutation j{};
      try {
        j = join(iv, z, y);
      } catch (const NoMinimum&) {
        ok = false;
        break;
      }
      if (!amazing_strict(ctx, y, j)) {
        ok = false;
        break;
      }
    }
  }
  ctx.memo.emplace(key, ok);
  return ok;
}

}  // namespace

bool is_amazing(const Interval& iv, const Permutation& z, AmazingMode mode) {
  if (!iv.contains(z)) throw ElementOutsideInterval("is_amazing: z outside [u,v]");
  if (mode == AmazingMode::OneLevel) return amazing_one_level(iv, z);
  StrictContext ctx{*iv.group(), iv.v(), {}};
  return amazing_strict(ctx, iv.u(), z);
}

std::vector<Permutation> enumerate_amazing(const Interval& iv, AmazingMode mode) {
  std::vector<Permutation> out;
  for (const Permutation& z : iv.elements())
    if (is_amazing(iv, z, mode)) out.push_back(z);
  return out;  // interval elements are already sorted by (length, window)
}

}  // namespace bruhat
