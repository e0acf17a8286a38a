#ifndef BRUHAT_SHORTCUT_HPP
#define BRUHAT_SHORTCUT_HPP

#include <string>
#include <utility>
#include <vector>

#include "bruhat/order.hpp"
#include "bruhat/perm.hpp"

namespace bruhat {

struct Shortcut {
  Permutation p;
  int dist = 0;  // d(u, p)
  friend bool operator==(const Shortcut&, const Shortcut&) = default;
  friend auto operator<=>(const Shortcut& a, const Shortcut& b) {
    if (auto c = a.dist <=> b.dist; c != 0) return c;
    return a.p <=> b.p;
  }
};

// Path-definition shortcut set: all p in [z,v] such that every geodesic from
// u to p in the full Bruhat graph meets [z,v] only at p. Sorted by
// (dist, window).
std::vector<Shortcut> shortcuts_by_paths(const Interval& iv, const Permutation& z);

// The cycles C with C*w a shortcut of [w,v] with respect to the standard
// decomposition of the given kind, enumerated from the characterization by
// value/position chains. Includes the empty cycle exactly when the chain
// anchor degenerates (w and v agree on the relevant position/value), i.e.
// when the decomposition equals w itself.
std::vector<Cycle> standard_shortcut_cycles(const Permutation& w, const Permutation& v, StandardKind kind);

// Closed-form shortcut set for the standard decomposition of the given kind:
// the cycles above applied to u, with distance = |support| - 1 (0 for the
// degenerate element).
std::vector<Shortcut> shortcuts_standard(const Interval& iv, StandardKind kind);

// Multiset of (d(u,p) + d(p,b), b) over p in the z-shortcut set and b in the
// shortcut set of [p,v] with respect to z' v p. Entries sorted with repeats.
class DSMultiset {
 public:
  DSMultiset() = default;
  explicit DSMultiset(std::vector<std::pair<int, Permutation>> entries);

  const std::vector<std::pair<int, Permutation>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const DSMultiset&, const DSMultiset&) = default;

  // JSON list of {degree, perm, multiplicity}.
  std::string json() const;

 private:
  std::vector<std::pair<int, Permutation>> entries_;  // canonically sorted
};

DSMultiset ds_multiset(const Interval& iv, const Permutation& z, const Permutation& zprime);

bool ds_symmetric(const Interval& iv, const Permutation& z, const Permutation& zprime);

// Every unordered pair of amazing decompositions checked for DS symmetry,
// plus the resulting partition under the transitive closure of z ~ z' when
// DS(z,z') = DS(z',z). Classes and their members are sorted.
struct DsAnalysis {
  std::vector<Permutation> amazing;
  std::vector<std::pair<Permutation, Permutation>> asymmetric_pairs;
  std::vector<std::vector<Permutation>> classes;
};

DsAnalysis analyze_ds_symmetry(const Interval& iv);

std::vector<std::vector<Permutation>> equivalence_classes(const Interval& iv);

}  // namespace bruhat

#endif  // BRUHAT_SHORTCUT_HPP
