#include "bruhat/bijection.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bruhat/errors.hpp"
#include "bruhat/order.hpp"
#include "bruhat/shortcut.hpp"

namespace bruhat {

int formal_cycle_size(const Cycle& c) {
  return c.is_identity() ? 1 : static_cast<int>(c.entries().size());
}

namespace {

// Entries rotated so the given head value comes first.
std::vector<int> head_first(const Cycle& c, int head, const char* what) {
  std::vector<int> e = c.entries();
  auto it = std::find(e.begin(), e.end(), head);
  if (it == e.end()) {
    std::ostringstream os;
    os << what << ": cycle " << c.str() << " does not contain its head " << head;
    throw MalformedPair(os.str());
  }
  std::rotate(e.begin(), it, e.end());
  return e;
}

Permutation list_perm(int n, const std::vector<int>& lst) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = i;
  if (lst.size() >= 2)
    for (std::size_t i = 0; i < lst.size(); ++i)
      w[static_cast<std::size_t>(lst[i]) - 1] = lst[(i + 1) % lst.size()];
  return Permutation(std::move(w));
}

// Left multiplication by the transposition (a b): swap the two values.
Permutation swap_values(const Permutation& p, int a, int b) {
  std::vector<int> w = p.window();
  for (int& v : w) {
    if (v == a)
      v = b;
    else if (v == b)
      v = a;
  }
  return Permutation(std::move(w));
}

int find_value(const std::vector<int>& lst, int x, const char* what) {
  auto it = std::find(lst.begin(), lst.end(), x);
  if (it == lst.end()) {
    std::ostringstream os;
    os << what << ": value " << x << " not present in working cycle";
    throw Error(os.str());
  }
  return static_cast<int>(it - lst.begin());
}

struct Insertion {
  bool before = false;  // insert y before x; otherwise after x
  int x = 0;
  int y = 0;
};

// Applies one block's edit to a working cycle (insertion first, then
// removal) and verifies that the list edit equals left multiplication by the
// transpositions it encodes.
void edit_cycle(int n, std::vector<int>& work, std::optional<Insertion> ins, std::optional<int> rem) {
  const Permutation before = list_perm(n, work);
  Permutation expect = before;

  if (ins) {
    if (std::find(work.begin(), work.end(), ins->y) != work.end())
      throw Error("cycle edit would duplicate a value");
    const int xi = find_value(work, ins->x, "insert");
    if (ins->before) {
      if (xi == 0) throw Error("insertion before the head is not a valid edit");
      work.insert(work.begin() + xi, ins->y);
      expect = swap_values(expect, ins->x, ins->y);
    } else {
      const int partner = work[(static_cast<std::size_t>(xi) + 1) % work.size()];
      work.insert(work.begin() + xi + 1, ins->y);
      expect = swap_values(expect, partner, ins->y);
    }
  }
  if (rem) {
    const int xi = find_value(work, *rem, "remove");
    if (xi == 0) throw Error("removal of the head is not a valid edit");
    const int partner = work[(static_cast<std::size_t>(xi) + 1) % work.size()];
    work.erase(work.begin() + xi);
    expect = swap_values(expect, *rem, partner);
  }
  if (list_perm(n, work) != expect) throw Error("cycle edit does not match its transposition product");
}

struct CommonEntry {
  int value = 0;
  int a_index = 0;
  int b_index = 0;
};

std::vector<std::pair<int, int>> split_blocks(const std::vector<CommonEntry>& common) {
  std::vector<std::pair<int, int>> blocks;
  std::size_t start = 0;
  for (std::size_t l = 1; l <= common.size(); ++l) {
    const bool cut = l == common.size() || common[l].a_index - common[l - 1].a_index > 1 ||
                     common[l].b_index - common[l - 1].b_index > 1;
    if (cut) {
      blocks.emplace_back(static_cast<int>(start), static_cast<int>(l - 1));
      start = l;
    }
  }
  return blocks;
}

// ---- validation of the v-free chain shapes -------------------------------

// A-side shape: (n, a_k, ..., a_1) with a_1 < ... < a_k < n and u-positions
// pos(a_1) < ... < pos(a_k) < pos(n). Returns the ascending a-list.
std::vector<int> check_a_shape(const Permutation& u, const Cycle& A, int exclude_value, const char* what) {
  if (A.rank() != u.rank()) throw MalformedPair("cycle rank does not match u");
  if (A.is_identity()) return {};
  const int n = u.rank();
  std::vector<int> e = head_first(A, n, what);
  std::vector<int> a(e.rbegin(), e.rend() - 1);  // ascending chain a_1..a_k
  int prev_val = 0, prev_pos = 0;
  for (int val : a) {
    if (val >= n || val <= prev_val) throw MalformedPair("a-chain values must increase below n");
    if (exclude_value > 0 && val == exclude_value) throw MalformedPair("a-chain may not contain the b-head value");
    if (u.position_of(val) <= prev_pos) throw MalformedPair("a-chain positions must increase");
    prev_val = val;
    prev_pos = u.position_of(val);
  }
  if (prev_pos >= u.position_of(n)) throw MalformedPair("a-chain must sit left of n");
  return a;
}

// B-side shape: (H, b_1, ..., b_h) with H < b_1 < ... < b_h (< n or <= n)
// and base-positions pos(H) < pos(b_1) < ... < pos(b_h). Returns the
// ascending b-list.
std::vector<int> check_b_shape(const Permutation& base, const Cycle& B, int head, bool allow_n, const char* what) {
  if (B.rank() != base.rank()) throw MalformedPair("cycle rank does not match u");
  if (B.is_identity()) return {};
  const int n = base.rank();
  std::vector<int> e = head_first(B, head, what);
  std::vector<int> b(e.begin() + 1, e.end());
  int prev_val = head, prev_pos = base.position_of(head);
  for (int val : b) {
    if (val <= prev_val) throw MalformedPair("b-chain values must increase above the head");
    if (val > n || (!allow_n && val == n)) throw MalformedPair("b-chain value out of range");
    if (base.position_of(val) <= prev_pos) throw MalformedPair("b-chain positions must increase");
    prev_val = val;
    prev_pos = base.position_of(val);
  }
  return b;
}

// ---- the forward map -----------------------------------------------------

DbarPair phi_engine(const Permutation& u, int head, const Cycle& A, const Cycle& B,
                    std::vector<BlockTrace>* trace, BlockOrder order = BlockOrder::Ascending) {
  const int n = u.rank();
  if (head < 1 || head > n) throw MalformedPair("b-head value out of range");
  const std::vector<int> a = check_a_shape(u, A, 0, "phi");
  const Permutation p = compose(cycle_to_perm(A), u);
  const std::vector<int> b = check_b_shape(p, B, head, false, "phi");
  const int k = static_cast<int>(a.size());
  const int h = static_cast<int>(b.size());

  const auto aval = [&](int i) { return i == k + 1 ? n : a[static_cast<std::size_t>(i) - 1]; };
  const auto bval = [&](int j) { return j == 0 ? head : b[static_cast<std::size_t>(j) - 1]; };

  // Common values: a-entries lying in the b-chain or equal to the head
  // (the head participates with b-index 0).
  std::vector<CommonEntry> common;
  for (int i = 1; i <= k; ++i) {
    const int val = a[static_cast<std::size_t>(i) - 1];
    if (val == head) {
      common.push_back({val, i, 0});
    } else {
      auto it = std::find(b.begin(), b.end(), val);
      if (it != b.end()) common.push_back({val, i, static_cast<int>(it - b.begin()) + 1});
    }
  }

  std::vector<int> awork = A.is_identity() ? std::vector<int>{n} : head_first(A, n, "phi");
  std::vector<int> bwork = B.is_identity() ? std::vector<int>{head} : head_first(B, head, "phi");

  auto blocks = split_blocks(common);
  if (order == BlockOrder::Descending) std::reverse(blocks.begin(), blocks.end());
  for (const auto& [first, last] : blocks) {
    const int i1 = common[static_cast<std::size_t>(first)].a_index;
    const int j1 = common[static_cast<std::size_t>(first)].b_index;
    const int im = common[static_cast<std::size_t>(last)].a_index;
    const int jm = common[static_cast<std::size_t>(last)].b_index;

    BlockTrace bt;
    bt.i_first = i1;
    bt.j_first = j1;
    bt.i_last = im;
    bt.j_last = jm;

    bt.forced_main = (j1 == 0);  // the head has no predecessor in the chain
    const bool main_right = bt.forced_main || u.position_of(bval(j1)) > u.position_of(bval(j1 - 1));

    bt.forced_sub = (jm == h);  // b_{j_m+1} undefined: convention a < b with value = head
    bt.a_cmp = aval(im + 1);
    bt.b_cmp = bt.forced_sub ? head : bval(jm + 1);
    if (!bt.forced_sub && bt.a_cmp == bt.b_cmp) throw Error("comparison values collide across blocks");
    const bool sub_lt = bt.forced_sub || bt.a_cmp < bt.b_cmp;

    bt.case_id = main_right ? (sub_lt ? 2 : 1) : (sub_lt ? 4 : 3);
    if (trace) trace->push_back(bt);

    switch (bt.case_id) {
      case 1:
        edit_cycle(n, awork, Insertion{true, aval(im), bt.b_cmp}, aval(i1));
        break;
      case 2:
        edit_cycle(n, bwork, Insertion{false, bval(jm), bt.a_cmp}, std::nullopt);
        edit_cycle(n, awork, std::nullopt, aval(i1));
        break;
      case 3:
        edit_cycle(n, awork, Insertion{true, aval(im), bt.b_cmp}, std::nullopt);
        edit_cycle(n, bwork, std::nullopt, bval(j1));
        break;
      case 4:
        edit_cycle(n, bwork, Insertion{false, bval(jm), bt.a_cmp}, bval(j1));
        break;
      default:
        break;
    }
  }

  DbarPair out;
  out.Bbar = bwork.size() <= 1 ? Cycle(n) : Cycle(n, bwork);
  out.Abar = awork.size() <= 1 ? Cycle(n) : Cycle(n, awork);
  return out;
}

// ---- the inverse map -----------------------------------------------------

DPair psi_engine(const Permutation& u, int head, const Cycle& Bbar, const Cycle& Abar,
                 std::vector<BlockTrace>* trace, BlockOrder order = BlockOrder::Ascending) {
  const int n = u.rank();
  if (head < 1 || head > n) throw MalformedPair("b-head value out of range");
  const std::vector<int> bb = check_b_shape(u, Bbar, head, true, "psi");
  const Permutation q = compose(cycle_to_perm(Bbar), u);
  const std::vector<int> aa = check_a_shape(q, Abar, head, "psi");
  const int kbar = static_cast<int>(aa.size());
  const int hbar = static_cast<int>(bb.size());

  // The head n of the A-side cycle participates with a-index kbar+1.
  const auto aval = [&](int i) { return i == kbar + 1 ? n : aa[static_cast<std::size_t>(i) - 1]; };
  const auto bval = [&](int j) { return j == 0 ? head : bb[static_cast<std::size_t>(j) - 1]; };

  std::vector<CommonEntry> common;
  for (int j = 1; j <= hbar; ++j) {
    const int val = bb[static_cast<std::size_t>(j) - 1];
    if (val == n) {
      common.push_back({val, kbar + 1, j});
    } else {
      auto it = std::find(aa.begin(), aa.end(), val);
      if (it != aa.end()) common.push_back({val, static_cast<int>(it - aa.begin()) + 1, j});
    }
  }

  std::vector<int> awork = Abar.is_identity() ? std::vector<int>{n} : head_first(Abar, n, "psi");
  std::vector<int> bwork = Bbar.is_identity() ? std::vector<int>{head} : head_first(Bbar, head, "psi");

  auto blocks = split_blocks(common);
  if (order == BlockOrder::Descending) std::reverse(blocks.begin(), blocks.end());
  for (const auto& [first, last] : blocks) {
    const int i1 = common[static_cast<std::size_t>(first)].a_index;
    const int j1 = common[static_cast<std::size_t>(first)].b_index;
    const int im = common[static_cast<std::size_t>(last)].a_index;
    const int jm = common[static_cast<std::size_t>(last)].b_index;

    BlockTrace bt;
    bt.i_first = i1;
    bt.j_first = j1;
    bt.i_last = im;
    bt.j_last = jm;

    bt.forced_main = (im == kbar + 1);  // the head n has no successor in the chain
    const bool main_low = bt.forced_main || u.position_of(aval(im)) < u.position_of(aval(im + 1));

    bt.forced_sub = (i1 == 1);  // abar_{i_1-1} undefined: convention b > a with value n
    bt.a_cmp = bt.forced_sub ? n : aval(i1 - 1);
    bt.b_cmp = bval(j1 - 1);
    if (!bt.forced_sub && bt.a_cmp == bt.b_cmp) throw Error("comparison values collide across blocks");
    const bool sub_gt = bt.forced_sub || bt.b_cmp > bt.a_cmp;

    bt.case_id = main_low ? (sub_gt ? 2 : 1) : (sub_gt ? 4 : 3);
    if (trace) trace->push_back(bt);

    switch (bt.case_id) {
      case 1:
        edit_cycle(n, bwork, Insertion{true, bval(j1), bt.a_cmp}, bval(jm));
        break;
      case 2:
        edit_cycle(n, awork, Insertion{false, aval(i1), bt.b_cmp}, std::nullopt);
        edit_cycle(n, bwork, std::nullopt, bval(jm));
        break;
      case 3:
        edit_cycle(n, awork, std::nullopt, aval(im));
        edit_cycle(n, bwork, Insertion{true, bval(j1), bt.a_cmp}, std::nullopt);
        break;
      case 4:
        edit_cycle(n, awork, Insertion{false, aval(i1), bt.b_cmp}, aval(im));
        break;
      default:
        break;
    }
  }

  DPair out;
  out.A = awork.size() <= 1 ? Cycle(n) : Cycle(n, awork);
  out.B = bwork.size() <= 1 ? Cycle(n) : Cycle(n, bwork);
  return out;
}

}  // namespace

BlockPartition block_partition(const Permutation& u, const Cycle& A, const Cycle& B) {
  const std::vector<int> a = check_a_shape(u, A, 0, "block_partition");
  const Permutation p = compose(cycle_to_perm(A), u);
  const std::vector<int> b = check_b_shape(p, B, 1, false, "block_partition");

  BlockPartition part;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int val = a[i];
    if (val == 1) {
      part.common.push_back({val, static_cast<int>(i) + 1, 0});
    } else {
      auto it = std::find(b.begin(), b.end(), val);
      if (it != b.end()) part.common.push_back({val, static_cast<int>(i) + 1, static_cast<int>(it - b.begin()) + 1});
    }
  }
  std::vector<CommonEntry> entries;
  for (const auto& c : part.common) entries.push_back({c.value, c.a_index, c.b_index});
  part.blocks = split_blocks(entries);
  return part;
}

DbarPair phi(const Permutation& u, const Cycle& A, const Cycle& B, std::vector<BlockTrace>* trace,
             BlockOrder order) {
  return phi_engine(u, 1, A, B, trace, order);
}

DPair psi(const Permutation& u, const Cycle& Bbar, const Cycle& Abar, std::vector<BlockTrace>* trace,
          BlockOrder order) {
  return psi_engine(u, 1, Bbar, Abar, trace, order);
}

DbarPair phi_alpha(const Permutation& u, int alpha, const Cycle& A, const Cycle& B,
                   std::vector<BlockTrace>* trace) {
  return phi_engine(u, alpha, A, B, trace);
}

DPair psi_alpha(const Permutation& u, int alpha, const Cycle& Bbar, const Cycle& Abar,
                std::vector<BlockTrace>* trace) {
  return psi_engine(u, alpha, Bbar, Abar, trace);
}

DPair psi_via_conjugation(const Permutation& u, const Permutation& v, const Cycle& Bbar, const Cycle& Abar) {
  detail::require_same_rank(u, v, "psi_via_conjugation");
  // Anchored membership of (Bbar, Abar): the chains must end on the
  // positions v dictates.
  const std::vector<int> bb = check_b_shape(u, Bbar, 1, true, "psi_via_conjugation");
  const Permutation q = compose(cycle_to_perm(Bbar), u);
  const std::vector<int> aa = check_a_shape(q, Abar, 1, "psi_via_conjugation");
  const int bpos = bb.empty() ? u.position_of(1) : u.position_of(bb.back());
  if (bpos != v.position_of(1)) throw MalformedPair("psi_via_conjugation: b-chain anchor mismatch");
  const int apos = aa.empty() ? q.position_of(u.rank()) : q.position_of(aa.front());
  if (apos != v.position_of(u.rank())) throw MalformedPair("psi_via_conjugation: a-chain anchor mismatch");

  const Permutation uc = conjugate_w0(u);
  const Cycle Ac = conjugate_cycle_w0(Bbar);  // head 1 -> head n
  const Cycle Bc = conjugate_cycle_w0(Abar);  // head n -> head 1
  const DbarPair image = phi_engine(uc, 1, Ac, Bc, nullptr);
  DPair out;
  out.A = conjugate_cycle_w0(image.Bbar);
  out.B = conjugate_cycle_w0(image.Abar);
  return out;
}

namespace {

std::vector<AnnotatedD> enumerate_d_impl(const Permutation& u, const Permutation& v, StandardKind b_kind) {
  detail::require_same_rank(u, v, "enumerate_D");
  if (!bruhat_leq(u, v)) throw NotComparable("enumerate_D: u is not below v");
  std::vector<AnnotatedD> out;
  for (const Cycle& A : standard_shortcut_cycles(u, v, StandardKind::Zn)) {
    const Permutation p = compose(cycle_to_perm(A), u);
    for (const Cycle& B : standard_shortcut_cycles(p, v, b_kind)) {
      AnnotatedD d;
      d.A = A;
      d.B = B;
      d.p = p;
      d.b = compose(cycle_to_perm(B), p);
      d.b_le_v = bruhat_leq(d.b, v);
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<AnnotatedDbar> enumerate_dbar_impl(const Permutation& u, const Permutation& v, StandardKind b_kind,
                                               int exclude_in_a) {
  detail::require_same_rank(u, v, "enumerate_Dbar");
  if (!bruhat_leq(u, v)) throw NotComparable("enumerate_Dbar: u is not below v");
  std::vector<AnnotatedDbar> out;
  for (const Cycle& Bbar : standard_shortcut_cycles(u, v, b_kind)) {
    const Permutation q = compose(cycle_to_perm(Bbar), u);
    for (const Cycle& Abar : standard_shortcut_cycles(q, v, StandardKind::Zn)) {
      if (exclude_in_a > 0) {
        const auto& e = Abar.entries();
        if (std::find(e.begin(), e.end(), exclude_in_a) != e.end()) continue;
      }
      AnnotatedDbar d;
      d.Bbar = Bbar;
      d.Abar = Abar;
      d.q = q;
      d.b = compose(cycle_to_perm(Abar), q);
      d.b_le_v = bruhat_leq(d.b, v);
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace

std::vector<AnnotatedD> enumerate_D(const Permutation& u, const Permutation& v) {
  return enumerate_d_impl(u, v, StandardKind::Z1);
}

std::vector<AnnotatedDbar> enumerate_Dbar(const Permutation& u, const Permutation& v) {
  return enumerate_dbar_impl(u, v, StandardKind::Z1, 0);
}

std::vector<AnnotatedD> enumerate_D_alpha(const Permutation& u, const Permutation& v) {
  return enumerate_d_impl(u, v, StandardKind::ZupN);
}

std::vector<AnnotatedDbar> enumerate_Dbar_alpha(const Permutation& u, const Permutation& v) {
  // The mirror conditions exclude alpha from the a-chain.
  return enumerate_dbar_impl(u, v, StandardKind::ZupN, v(v.rank()));
}

namespace {

std::string canon_cycle(const Cycle& c, int head) {
  if (c.is_identity()) return "()";
  std::ostringstream os;
  os << '(';
  const std::vector<int> e = head_first(c, head, "canon");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  os << ')';
  return os.str();
}

std::string pair_key(const Cycle& x, int xhead, const Cycle& y, int yhead) {
  return canon_cycle(x, xhead) + "|" + canon_cycle(y, yhead);
}

LemmaReport verify_lemma_impl(const Permutation& u, const Permutation& v, bool alpha_variant) {
  const int n = u.rank();
  const int head = alpha_variant ? v(n) : 1;

  const auto D = alpha_variant ? enumerate_D_alpha(u, v) : enumerate_D(u, v);
  const auto Dbar = alpha_variant ? enumerate_Dbar_alpha(u, v) : enumerate_Dbar(u, v);

  LemmaReport report;
  report.d_size = static_cast<int>(D.size());
  report.dbar_size = static_cast<int>(Dbar.size());

  auto fail = [&](const std::string& msg) {
    report.ok = false;
    if (report.failures.size() < 16) report.failures.push_back(msg);
  };

  if (D.size() != Dbar.size()) fail("size mismatch between the two chain-pair sets");

  std::unordered_map<std::string, std::size_t> dbar_by_key;
  for (std::size_t i = 0; i < Dbar.size(); ++i)
    dbar_by_key.emplace(pair_key(Dbar[i].Bbar, head, Dbar[i].Abar, n), i);
  std::unordered_set<std::string> seen_images;

  for (const auto& d : D) {
    const std::string where = "u=" + u.str() + " v=" + v.str() + " A=" + d.A.str() + " B=" + d.B.str();
    DbarPair image;
    try {
      image = phi_engine(u, head, d.A, d.B, nullptr);
    } catch (const Error& e) {
      fail("phi threw on " + where + ": " + e.what());
      continue;
    }
    const std::string key = pair_key(image.Bbar, head, image.Abar, n);
    auto it = dbar_by_key.find(key);
    if (it == dbar_by_key.end()) {
      fail("phi image outside the mirror set on " + where);
      continue;
    }
    if (!seen_images.insert(key).second) fail("phi image repeated on " + where);
    if (Dbar[it->second].b_le_v != d.b_le_v) fail("phi image changes the b<=v annotation on " + where);

    const Permutation ba = compose(cycle_to_perm(d.B), cycle_to_perm(d.A));
    const Permutation ab = compose(cycle_to_perm(image.Abar), cycle_to_perm(image.Bbar));
    if (ba != ab) fail("product identity B*A = Abar*Bbar fails on " + where);

    const int lhs = formal_cycle_size(d.A) + formal_cycle_size(d.B);
    const int rhs = formal_cycle_size(image.Bbar) + formal_cycle_size(image.Abar);
    if (lhs != rhs) fail("size identity fails on " + where);

    DPair back;
    try {
      back = psi_engine(u, head, image.Bbar, image.Abar, nullptr);
    } catch (const Error& e) {
      fail("psi threw on " + where + ": " + e.what());
      continue;
    }
    if (!(back.A == d.A && back.B == d.B)) fail("psi does not invert phi on " + where);

    if (!alpha_variant) {
      DPair conj;
      try {
        conj = psi_via_conjugation(u, v, image.Bbar, image.Abar);
      } catch (const Error& e) {
        fail("psi_via_conjugation threw on " + where + ": " + std::string(e.what()));
        continue;
      }
      if (!(conj.A == back.A && conj.B == back.B)) fail("psi and conjugation route disagree on " + where);
    }
  }

  // Surjectivity: every mirror pair is hit back into D by psi.
  std::unordered_set<std::string> d_keys;
  for (const auto& d : D) d_keys.insert(pair_key(d.A, n, d.B, head));
  for (const auto& m : Dbar) {
    const std::string where = "u=" + u.str() + " v=" + v.str() + " Bbar=" + m.Bbar.str() + " Abar=" + m.Abar.str();
    DPair back;
    try {
      back = psi_engine(u, head, m.Bbar, m.Abar, nullptr);
    } catch (const Error& e) {
      fail("psi threw on mirror pair " + where + ": " + e.what());
      continue;
    }
    const std::string key = pair_key(back.A, n, back.B, head);
    if (!d_keys.count(key)) {
      fail("psi image outside the chain-pair set on " + where);
      continue;
    }
    DbarPair forward = phi_engine(u, head, back.A, back.B, nullptr);
    if (!(forward.Bbar == m.Bbar && forward.Abar == m.Abar)) fail("phi does not invert psi on " + where);
  }

  return report;
}

}  // namespace

LemmaReport verify_lemma(const Permutation& u, const Permutation& v) {
  return verify_lemma_impl(u, v, false);
}

LemmaReport verify_lemma_alpha(const Permutation& u, const Permutation& v) {
  return verify_lemma_impl(u, v, true);
}

}  // namespace bruhat
