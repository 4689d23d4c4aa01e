#include "powmon/power.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace powmon {

unsigned PSet::size() const { return std::popcount(bits); }

bool operator<(PSet a, PSet b) {
  unsigned pa = std::popcount(a.bits), pb = std::popcount(b.bits);
  if (pa != pb) return pa < pb;
  if (a.bits == b.bits) return false;
  // Equal sizes: the set owning the lowest differing index comes first.
  ElemMask d = a.bits ^ b.bits;
  return a.bits & (d & -d);
}

PSet make_pset(const FiniteMonoid& h, ElemMask bits) {
  if (!(bits & 1))
    throw MonoidError("subset must contain the identity element");
  if (bits & ~h.all_mask())
    throw MonoidError("subset mentions elements outside the monoid");
  return PSet{bits};
}

std::vector<ElementId> pset_elements(PSet x) {
  std::vector<ElementId> out;
  for (ElemMask m = x.bits; m; m &= m - 1)
    out.push_back(static_cast<ElementId>(std::countr_zero(m)));
  return out;
}

PSet pmul(const FiniteMonoid& h, PSet x, PSet y) {
  ElemMask out = 0;
  for (ElemMask mx = x.bits; mx; mx &= mx - 1) {
    ElementId a = static_cast<ElementId>(std::countr_zero(mx));
    for (ElemMask my = y.bits; my; my &= my - 1)
      out |= ElemMask{1} << h.op(a, static_cast<ElementId>(std::countr_zero(my)));
  }
  return PSet{out};
}

PSet word_product(const FiniteMonoid& h, std::span<const PSet> word) {
  PSet p = kIdentityOnly;
  for (PSet letter : word) p = pmul(h, p, letter);
  return p;
}

namespace {

// Visits the identity-containing submasks of x (including 1 and x itself).
template <typename F>
void for_each_sub_pset(ElemMask x, F&& f) {
  ElemMask vary = x & ~ElemMask{1};
  ElemMask sub = vary;
  for (;;) {
    f(PSet{sub | 1});
    if (sub == 0) break;
    sub = (sub - 1) & vary;
  }
}

}  // namespace

bool divides_p(const FiniteMonoid& h, PSet a, PSet x) {
  if (!a.subset_of(x)) return false;
  bool found = false;
  for_each_sub_pset(x.bits, [&](PSet u) {
    if (found) return;
    PSet ua = pmul(h, u, a);
    if (!ua.subset_of(x)) return;
    for_each_sub_pset(x.bits, [&](PSet v) {
      if (!found && pmul(h, ua, v) == x) found = true;
    });
  });
  return found;
}

bool is_irreducible(const FiniteMonoid& h, PSet x) {
  if (x == kIdentityOnly) return false;
  bool split = false;
  for_each_sub_pset(x.bits, [&](PSet y) {
    if (split || y == x) return;
    for_each_sub_pset(x.bits, [&](PSet z) {
      if (!split && z != x && pmul(h, y, z) == x) split = true;
    });
  });
  return !split;
}

bool is_atom(const FiniteMonoid& h, PSet x) {
  if (x == kIdentityOnly) return false;
  // Any Y, Z with Y*Z == X are subsets of X, so the scan below is complete.
  bool split = false;
  for_each_sub_pset(x.bits, [&](PSet y) {
    if (split || y == kIdentityOnly) return;
    for_each_sub_pset(x.bits, [&](PSet z) {
      if (!split && z != kIdentityOnly && pmul(h, y, z) == x) split = true;
    });
  });
  return !split;
}

bool is_quark(const FiniteMonoid& h, PSet x) {
  if (x == kIdentityOnly) return false;
  bool divided = false;
  for_each_sub_pset(x.bits, [&](PSet a) {
    if (!divided && a != kIdentityOnly && a != x && divides_p(h, a, x))
      divided = true;
  });
  return !divided;
}

std::vector<PSet> irreducibles_within(const FiniteMonoid& h, PSet x) {
  std::vector<PSet> out;
  for_each_sub_pset(x.bits, [&](PSet s) {
    if (is_irreducible(h, s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void enumerate_words(const FiniteMonoid& h, PSet x, unsigned max_len,
                     const std::vector<PSet>& letters, FactorWord& prefix,
                     PSet prefix_product, bool strict_growth,
                     const std::function<void(const FactorWord&)>& emit) {
  if (!prefix.empty() && prefix_product == x) {
    emit(prefix);
    if (strict_growth) return;  // no further growth is possible inside x
  }
  if (prefix.size() >= max_len) return;
  for (PSet letter : letters) {
    PSet next = pmul(h, prefix_product, letter);
    if (!next.subset_of(x)) continue;
    if (strict_growth && next == prefix_product) continue;
    prefix.push_back(letter);
    enumerate_words(h, x, max_len, letters, prefix, next, strict_growth, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<FactorWord> factorizations(const FiniteMonoid& h, PSet x,
                                       unsigned max_len) {
  std::vector<FactorWord> out;
  if (x == kIdentityOnly) {
    out.emplace_back();  // the empty word, the only factorization of {e}
    return out;
  }
  std::vector<PSet> letters = irreducibles_within(h, x);
  FactorWord prefix;
  enumerate_words(h, x, max_len, letters, prefix, kIdentityOnly, false,
                  [&](const FactorWord& w) { out.push_back(w); });
  return out;
}

bool words_equivalent(const FactorWord& a, const FactorWord& b) {
  return word_multiset(a) == word_multiset(b);
}

std::vector<PSet> word_multiset(const FactorWord& w) {
  std::vector<PSet> m(w.begin(), w.end());
  std::sort(m.begin(), m.end());
  return m;
}

bool multiset_contains(std::span<const PSet> a, std::span<const PSet> b) {
  std::size_t i = 0;
  for (PSet need : b) {
    while (i < a.size() && a[i] < need) ++i;
    if (i == a.size() || !(a[i] == need)) return false;
    ++i;
  }
  return true;
}

std::vector<MinimalFactorization> minimal_factorizations(const FiniteMonoid& h,
                                                         PSet x) {
  std::vector<MinimalFactorization> out;
  if (x == kIdentityOnly) {
    out.push_back({{}, {}});
    return out;
  }
  // In a word with a minimal multiset every prefix product grows strictly
  // (a letter absorbed by its prefix could be dropped), so the search depth
  // is bounded by |X| - 1 on its own; the explicit cap restates the bound.
  const unsigned cap = x.size() - 1;
  std::vector<PSet> letters = irreducibles_within(h, x);
  std::map<std::vector<PSet>, FactorWord> found;  // multiset -> first witness
  FactorWord prefix;
  enumerate_words(h, x, cap, letters, prefix, kIdentityOnly, true,
                  [&](const FactorWord& w) { found.emplace(word_multiset(w), w); });
  for (const auto& [multiset, witness] : found) {
    bool minimal = true;
    for (const auto& [other, ow] : found) {
      if (other.size() < multiset.size() &&
          multiset_contains(multiset, other)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back({multiset, witness});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.multiset.size() != b.multiset.size())
      return a.multiset.size() < b.multiset.size();
    return std::lexicographical_compare(a.multiset.begin(), a.multiset.end(),
                                        b.multiset.begin(), b.multiset.end());
  });
  return out;
}

namespace {

// Non-identity elements of the mask, ascending.
std::vector<ElementId> nonidentity_elements(ElemMask m) {
  std::vector<ElementId> out;
  for (ElemMask rest = m & ~ElemMask{1}; rest; rest &= rest - 1)
    out.push_back(static_cast<ElementId>(std::countr_zero(rest)));
  return out;
}

void square_free_rec(const FiniteMonoid& h, PSet x, FactorWord& out) {
  if (x == kIdentityOnly) return;
  if (x.size() == 2) {
    out.push_back(x);
    return;
  }
  // Pivot: an element of X whose principal ideal is minimal (the ideals of
  // an almost-breakable monoid form a chain); ties go to the lowest id.
  std::vector<ElementId> members = nonidentity_elements(x.bits);
  ElementId pivot = members[0];
  ElemMask pivot_ideal = principal_ideal(h, pivot);
  for (ElementId y : members) {
    ElemMask ideal = principal_ideal(h, y);
    if (ideal != pivot_ideal && (ideal & ~pivot_ideal) == 0) {
      pivot = y;
      pivot_ideal = ideal;
    }
  }
  // Split X into the pivot's associates Y, the elements fixing all of Y
  // from the left (A), and the rest (B); each block keeps the identity.
  ElemMask ymask = 1, amask = 1, bmask = 1;
  for (ElementId u : members) {
    if (principal_ideal(h, u) == pivot_ideal) {
      ymask |= ElemMask{1} << u;
      continue;
    }
    bool fixes_all = true;
    for (ElementId y : members)
      if (principal_ideal(h, y) == pivot_ideal && h.op(u, y) != y) {
        fixes_all = false;
        break;
      }
    (fixes_all ? amask : bmask) |= ElemMask{1} << u;
  }
  if (bmask == 1) {
    if (amask == 1) {
      // All of X is one associate class: X = {e,y1}***{e,yk} in any order.
      for (ElementId y : members) out.push_back(PSet{(ElemMask{1} << y) | 1});
      return;
    }
    // X = A*Y with disjoint non-identity supports.
    square_free_rec(h, PSet{amask}, out);
    square_free_rec(h, PSet{ymask}, out);
    return;
  }
  // Some b fails to fix some associate y: X = {e,y} * (X minus y).
  for (ElementId y : nonidentity_elements(ymask)) {
    for (ElementId b : nonidentity_elements(bmask)) {
      if (h.op(b, y) != y) {
        out.push_back(PSet{(ElemMask{1} << y) | 1});
        square_free_rec(h, PSet{x.bits & ~(ElemMask{1} << y)}, out);
        return;
      }
    }
  }
  throw MonoidError("square-free split failed; table is not almost-breakable");
}

}  // namespace

FactorWord square_free_factorization(const FiniteMonoid& h, PSet x) {
  if (!is_almost_breakable(h))
    throw NotAlmostBreakableError(
        "square-free factorization needs an almost-breakable monoid");
  FactorWord out;
  square_free_rec(h, x, out);
  // The construction promises pairwise distinct letters; a repeat would be
  // a logic error, not an input error.
  std::vector<PSet> sorted = word_multiset(out);
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::logic_error("square-free factorization repeated a letter");
  return out;
}

bool is_divides_antichain(const FiniteMonoid& h, ElemMask a) {
  if (a == 0 || (a & 1)) return false;
  std::vector<ElementId> members;
  for (ElemMask m = a; m; m &= m - 1)
    members.push_back(static_cast<ElementId>(std::countr_zero(m)));
  for (ElementId x : members)
    for (ElementId y : members)
      if (x != y && divides_h(h, x, y)) return false;
  return true;
}

std::vector<PSet> all_psets(const FiniteMonoid& h) {
  std::vector<PSet> out;
  for_each_sub_pset(h.all_mask(), [&](PSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace powmon
