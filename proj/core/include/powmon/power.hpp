// The reduced finite power monoid of a finite monoid H: identity-containing
// subsets under setwise product, with divisibility, irreducibility and
// (minimal) factorization machinery.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "powmon/monoid.hpp"

namespace powmon {

// A subset of H containing the identity, as a bit mask over element ids.
// Ordered by (cardinality, lexicographic on the ascending index sequence);
// note this differs from numeric mask order: {0,1,4} < {0,2,3}.
struct PSet {
  ElemMask bits = 1;

  explicit constexpr PSet(ElemMask m = 1) : bits(m) {}

  bool contains(ElementId x) const { return (bits >> x) & 1; }
  unsigned size() const;
  bool subset_of(PSet other) const { return (bits & ~other.bits) == 0; }

  friend bool operator==(PSet a, PSet b) { return a.bits == b.bits; }
  friend bool operator!=(PSet a, PSet b) { return a.bits != b.bits; }
  friend bool operator<(PSet a, PSet b);
};

inline constexpr PSet kIdentityOnly{1};

// Checks that the mask names a valid subset of H containing the identity.
PSet make_pset(const FiniteMonoid& h, ElemMask bits);

// Ascending element ids of the set.
std::vector<ElementId> pset_elements(PSet x);

// Setwise product {a*b : a in X, b in Y}.
PSet pmul(const FiniteMonoid& h, PSet x, PSet y);

using FactorWord = std::vector<PSet>;

// Product of a word of sets; the empty word gives {identity}.
PSet word_product(const FiniteMonoid& h, std::span<const PSet> word);

// A divides X in the power monoid: U*A*V == X for some subsets U, V of X
// containing the identity (divisors of X always live inside X).
bool divides_p(const FiniteMonoid& h, PSet a, PSet x);

// X != {e} and X has no product decomposition into two proper subsets
// containing the identity.
bool is_irreducible(const FiniteMonoid& h, PSet x);

// X != {e} and X != Y*Z for all Y, Z != {e} (proper or not).
bool is_atom(const FiniteMonoid& h, PSet x);

// X != {e} and no element outside {{e}, X} divides X.
bool is_quark(const FiniteMonoid& h, PSet x);

// All irreducible subsets of X (containing the identity), sorted.
std::vector<PSet> irreducibles_within(const FiniteMonoid& h, PSet x);

// All words over irreducibles_within(h, x) of length <= max_len whose
// product is X, in lexicographic prefix-first order. Every prefix product
// must stay inside X, which prunes nothing that completes. X == {e} yields
// exactly the empty word.
std::vector<FactorWord> factorizations(const FiniteMonoid& h, PSet x,
                                       unsigned max_len);

// Words are equivalent when one is a permutation of the other.
bool words_equivalent(const FactorWord& a, const FactorWord& b);

// Letters of a word as a sorted multiset.
std::vector<PSet> word_multiset(const FactorWord& w);

// a contains b as a multiset (both sorted).
bool multiset_contains(std::span<const PSet> a, std::span<const PSet> b);

struct MinimalFactorization {
  std::vector<PSet> multiset;  // sorted letters
  FactorWord witness;          // first ordering found that multiplies to X
};

// All factorizations of X whose multiset of letters is minimal under
// multiset inclusion, sorted by (length, letters). Minimal factorizations
// never need more than |X| - 1 letters.
std::vector<MinimalFactorization> minimal_factorizations(
    const FiniteMonoid& h, PSet x);

// For an almost-breakable H: a factorization of X with pairwise distinct
// letters, built by splitting X along the tower of principal ideals.
// Throws NotAlmostBreakableError otherwise.
FactorWord square_free_factorization(const FiniteMonoid& h, PSet x);

// A set of non-identity elements none of which divides another in H.
// Adjoining the identity to such a set always yields an irreducible.
bool is_divides_antichain(const FiniteMonoid& h, ElemMask a);

// All identity-containing subsets of H, sorted canonically.
std::vector<PSet> all_psets(const FiniteMonoid& h);

}  // namespace powmon
