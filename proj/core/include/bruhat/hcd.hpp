#ifndef BRUHAT_HCD_HPP
#define BRUHAT_HCD_HPP

#include <optional>
#include <string>
#include <vector>

#include "bruhat/order.hpp"
#include "bruhat/perm.hpp"

namespace bruhat {

// A set of Bruhat-graph edges sharing one target; identified with the set of
// sources. E^p fans are built with sources in [u,v] \ [z,v].
struct EdgeFan {
  Permutation target;
  std::vector<Permutation> sources;
};

struct DiamondWitness {
  Permutation x, a1, a2, y;
};

struct ClusterWitness {
  Permutation p;
  std::vector<Permutation> sources;  // antichain subset of E^p that fails to span
};

struct HcdReport {
  Permutation z;
  bool diamond_complete = false;
  bool cluster_ok = false;
  std::optional<DiamondWitness> diamond_witness;
  std::optional<ClusterWitness> cluster_witness;
  bool ok() const { return diamond_complete && cluster_ok; }
};

// [z,v] is diamond complete w.r.t. [u,v]: whenever x in [u,v] and distinct
// a1, a2 and y in [z,v] satisfy x->a1->y and x->a2->y, x lies in [z,v].
bool is_diamond_complete(const Interval& iv, const Permutation& z);

// Number of embeddings of the |E|-hypercube into the Bruhat graph with the
// top cell on fan.target and the co-atoms on the fan sources. The fan spans
// a hypercube exactly when this count is 1.
int hypercube_embedding_count(const Interval& iv, const EdgeFan& fan);
bool spans_hypercube(const Interval& iv, const EdgeFan& fan);

// Every subset of the fan whose sources are pairwise Bruhat-incomparable
// spans a hypercube.
bool spans_hypercube_cluster(const Interval& iv, const EdgeFan& fan);

// Hypercube-decomposition test: diamond completeness plus, for every p in
// [z,v], the cluster condition on E^p = {x->p : x in [u,v] \ [z,v]}.
HcdReport is_hcd(const Interval& iv, const Permutation& z);

// min([z,v] cap [x,v]); throws NoMinimum when the intersection has none.
Permutation join(const Interval& iv, const Permutation& z, const Permutation& x);

enum class AmazingMode {
  OneLevel,  // require z v x to be an HCD of [x,v] for every x
  Strict,    // additionally recurse: z v x must itself be amazing for [x,v]
};

bool is_amazing(const Interval& iv, const Permutation& z, AmazingMode mode = AmazingMode::OneLevel);

// All amazing decompositions of the interval, sorted by (length, window).
std::vector<Permutation> enumerate_amazing(const Interval& iv, AmazingMode mode = AmazingMode::OneLevel);

}  // namespace bruhat

#endif  // BRUHAT_HCD_HPP
