#ifndef BRUHAT_BIJECTION_HPP
#define BRUHAT_BIJECTION_HPP

#include <string>
#include <vector>

#include "bruhat/perm.hpp"

namespace bruhat {

// Pair of cycles (A, B) with A headed by n and B headed by 1 (or by
// alpha = v(n) in the alpha variant); encodes a double-shortcut datum
// p = A u, b = B p.
struct DPair {
  Cycle A, B;
  friend bool operator==(const DPair&, const DPair&) = default;
};

// Mirror-shaped pair (B-bar, A-bar) encoding q = B-bar u, b = A-bar q.
struct DbarPair {
  Cycle Bbar, Abar;
  friend bool operator==(const DbarPair&, const DbarPair&) = default;
};

// Per-block record of the case analysis: which of the four transformations
// fired and which comparison values were used (after sentinel substitution).
struct BlockTrace {
  int case_id = 0;  // 1..4
  int i_first = 0, j_first = 0, i_last = 0, j_last = 0;  // original chain indices
  int a_cmp = 0, b_cmp = 0;                              // compared values
  bool forced_main = false;                              // undefined predecessor/successor
  bool forced_sub = false;                               // sentinel comparison value
};

// Common elements of the two supports with their chain indices, partitioned
// into maximal consecutive runs: a new block starts whenever the a-index or
// the b-index jumps by more than one.
struct BlockPartition {
  struct Common {
    int value = 0;
    int a_index = 0;  // 1..k
    int b_index = 0;  // 0..h, 0 for the head value
  };
  std::vector<Common> common;
  std::vector<std::pair<int, int>> blocks;  // inclusive [first,last] ranges into `common`
};

BlockPartition block_partition(const Permutation& u, const Cycle& A, const Cycle& B);

// Blocks never interact, so the application order cannot matter; the knob
// exists so tests can run both orders and compare.
enum class BlockOrder { Ascending, Descending };

// The bijection between the two shortcut-pair encodings and its inverse,
// applied blockwise. Both validate the v-free shape conditions of their
// input pair and throw MalformedPair on violation.
DbarPair phi(const Permutation& u, const Cycle& A, const Cycle& B, std::vector<BlockTrace>* trace = nullptr,
             BlockOrder order = BlockOrder::Ascending);
DPair psi(const Permutation& u, const Cycle& Bbar, const Cycle& Abar, std::vector<BlockTrace>* trace = nullptr,
          BlockOrder order = BlockOrder::Ascending);

// psi computed as conjugation by the longest element around phi on the
// conjugated interval; must agree with psi. Validates full membership of
// (Bbar, Abar) against the anchors of the interval [u,v].
DPair psi_via_conjugation(const Permutation& u, const Permutation& v, const Cycle& Bbar, const Cycle& Abar);

// Variant with the distinguished value 1 replaced by alpha throughout.
// alpha = 1 reduces exactly to phi/psi.
DbarPair phi_alpha(const Permutation& u, int alpha, const Cycle& A, const Cycle& B,
                   std::vector<BlockTrace>* trace = nullptr);
DPair psi_alpha(const Permutation& u, int alpha, const Cycle& Bbar, const Cycle& Abar,
                std::vector<BlockTrace>* trace = nullptr);

// One enumerated pair together with the elements it encodes and whether the
// endpoint b stays below v (the subset relevant to double shortcuts).
struct AnnotatedD {
  Cycle A, B;
  Permutation p, b;
  bool b_le_v = false;
};
struct AnnotatedDbar {
  Cycle Bbar, Abar;
  Permutation q, b;
  bool b_le_v = false;
};

// All pairs satisfying the chain conditions, by direct generation from the
// position-monotone chains (anchored at the interval endpoints).
std::vector<AnnotatedD> enumerate_D(const Permutation& u, const Permutation& v);
std::vector<AnnotatedDbar> enumerate_Dbar(const Permutation& u, const Permutation& v);
std::vector<AnnotatedD> enumerate_D_alpha(const Permutation& u, const Permutation& v);
std::vector<AnnotatedDbar> enumerate_Dbar_alpha(const Permutation& u, const Permutation& v);

// Full verification of the bijection over one interval: phi lands in the
// mirror set, products and degree sums are preserved, psi inverts phi (and
// agrees with the conjugation route in the standard variant), and the two
// sets have equal size. Failures carry printable witnesses.
struct LemmaReport {
  int d_size = 0;
  int dbar_size = 0;
  bool ok = true;
  std::vector<std::string> failures;
};

LemmaReport verify_lemma(const Permutation& u, const Permutation& v);
LemmaReport verify_lemma_alpha(const Permutation& u, const Permutation& v);

// Formal cycle size: written length including the distinguished head, so the
// identity cycle counts 1. The degree sums preserved by phi/psi are sums of
// (formal size - 1).
int formal_cycle_size(const Cycle& c);

}  // namespace bruhat

#endif  // BRUHAT_BIJECTION_HPP
