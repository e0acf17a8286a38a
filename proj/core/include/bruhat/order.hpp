#ifndef BRUHAT_ORDER_HPP
#define BRUHAT_ORDER_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bruhat/bitset.hpp"
#include "bruhat/perm.hpp"

namespace bruhat {

// Fully materialized combinatorics of S_n for desk-scale n (n <= 7): all
// elements in lexicographic window order, lengths, Bruhat-graph adjacency
// (edges x -> tx with length increase, over all transpositions t) and the
// Bruhat order as reachability bitsets. Immutable after construction and
// safe to share across threads.
class SymmetricGroup {
 public:
  static std::shared_ptr<const SymmetricGroup> get(int n);

  int rank() const { return n_; }
  int order() const { return static_cast<int>(elements_.size()); }

  const Permutation& element(int idx) const { return elements_[static_cast<std::size_t>(idx)]; }
  int index_of(const Permutation& p) const;  // lexicographic rank of the window

  int length_of(int idx) const { return lengths_[static_cast<std::size_t>(idx)]; }

  std::span<const int> up_neighbors(int idx) const;
  std::span<const int> down_neighbors(int idx) const;
  const Bitset& up_neighbor_bits(int idx) const { return up_bits_[static_cast<std::size_t>(idx)]; }
  const Bitset& down_neighbor_bits(int idx) const { return down_bits_[static_cast<std::size_t>(idx)]; }

  // {y : x <= y} and {y : y <= x} in Bruhat order.
  const Bitset& upset(int idx) const { return upset_[static_cast<std::size_t>(idx)]; }
  const Bitset& downset(int idx) const { return downset_[static_cast<std::size_t>(idx)]; }
  bool leq(int x, int y) const { return upset_[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y)); }

  int inverse_of(int idx) const { return inverse_[static_cast<std::size_t>(idx)]; }
  int conjugate_w0_of(int idx) const { return conj_w0_[static_cast<std::size_t>(idx)]; }

  int identity_index() const { return 0; }
  int w0_index() const { return order() - 1; }

 private:
  explicit SymmetricGroup(int n);

  int n_;
  std::vector<Permutation> elements_;
  std::vector<int> lengths_;
  std::vector<int> up_flat_, up_off_;
  std::vector<int> down_flat_, down_off_;
  std::vector<Bitset> up_bits_, down_bits_;
  std::vector<Bitset> upset_, downset_;
  std::vector<int> inverse_, conj_w0_;
};

// Materialized Bruhat interval [u,v]: the element set {x : u <= x <= v},
// exposed both as a bitset over group indices and as a list sorted by
// (length, window). Queries are read-only and thread-safe.
class Interval {
 public:
  Interval(const Permutation& u, const Permutation& v);  // throws NotComparable

  const Permutation& u() const { return u_; }
  const Permutation& v() const { return v_; }
  int u_index() const { return u_idx_; }
  int v_index() const { return v_idx_; }
  int rank() const { return u_.rank(); }

  const std::shared_ptr<const SymmetricGroup>& group() const { return group_; }

  std::size_t size() const { return elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const Bitset& member_bits() const { return members_; }
  bool contains(const Permutation& x) const;

  // Bruhat-graph edges x -> y with both endpoints in the interval.
  std::vector<Permutation> up_edges(const Permutation& x) const;

 private:
  std::shared_ptr<const SymmetricGroup> group_;
  Permutation u_, v_;
  int u_idx_, v_idx_;
  Bitset members_;
  std::vector<Permutation> elems_;
};

struct BruhatEdge {
  Permutation source;
  Permutation target;
  friend bool operator==(const BruhatEdge&, const BruhatEdge&) = default;
};

struct BruhatPath {
  std::vector<Permutation> vertices;
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const BruhatPath&, const BruhatPath&) = default;
};

// Bruhat order by the dominance criterion:
// x <= y iff for all i,j: #{k <= i : x(k) >= j} <= #{k <= i : y(k) >= j}.
bool bruhat_leq(const Permutation& x, const Permutation& y);

Interval interval(const Permutation& u, const Permutation& v);

// All edges x -> p with x in `domain`, p x^{-1} a transposition and
// length(x) < length(p).
std::vector<BruhatEdge> bruhat_edges_into(const Permutation& p, std::span<const Permutation> domain);

// Minimal number of Bruhat-graph edges from u to p, in the full graph of S_n.
int distance(const Permutation& u, const Permutation& p);  // throws NotComparable

// BFS distance vectors over the whole group, indexed by element; -1 marks
// unreachable. Edges always increase length, so these are graph distances
// upward from / downward to the given element.
std::vector<int> distances_from(const SymmetricGroup& G, int from);
std::vector<int> distances_to(const SymmetricGroup& G, int to);

// Every path from u to p of length exactly distance(u,p).
std::vector<BruhatPath> geodesics(const Permutation& u, const Permutation& p);

// The unique x in xs with x <= y for all y in xs; throws NoMinimum otherwise.
Permutation poset_min(std::span<const Permutation> xs);

// The four standard hypercube decompositions: minima of the intersection of
// [u,v] with a parabolic coset of v.
//   Zn   : min([u,v] cap W_{S\{s_{n-1}}} v)
//   Z1   : min([u,v] cap W_{S\{s_1}} v)
//   ZupN : min([u,v] cap v W_{S\{s_{n-1}}})
//   Zup1 : min([u,v] cap v W_{S\{s_1}})
enum class StandardKind { Zn, Z1, ZupN, Zup1 };

const char* standard_kind_name(StandardKind kind);

Permutation standard_hcd(const Permutation& u, const Permutation& v, StandardKind kind);
Permutation standard_hcd(const Interval& iv, StandardKind kind);

}  // namespace bruhat

#endif  // BRUHAT_ORDER_HPP
