#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "powmon/census.hpp"
#include "powmon/fixtures.hpp"
#include "powmon/power.hpp"

using namespace powmon;

namespace {

PSet ps(ElemMask m) { return PSet{m}; }

// multisets of letters, as sets, for easy equality checks
std::set<std::vector<PSet>> multisets_of(
    const std::vector<MinimalFactorization>& ms) {
  std::set<std::vector<PSet>> out;
  for (const auto& m : ms) out.insert(m.multiset);
  return out;
}

// independent route to the minimal multisets: enumerate every
// factorization up to the full cap |X| and keep the inclusion-minimal
// letter multisets
std::set<std::vector<PSet>> minimal_by_sieve(const FiniteMonoid& h, PSet x) {
  std::set<std::vector<PSet>> all;
  for (const auto& w : factorizations(h, x, x.size()))
    all.insert(word_multiset(w));
  std::set<std::vector<PSet>> keep;
  for (const auto& cand : all) {
    bool minimal = true;
    for (const auto& other : all) {
      if (other != cand && multiset_contains(cand, other)) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.insert(cand);
  }
  return keep;
}

}  // namespace

TEST_CASE("pset ordering is by size, then by the element sequence") {
  CHECK(ps(0b1) < ps(0b11));
  CHECK(ps(0b10011) < ps(0b01101));  // {0,1,4} before {0,2,3}
  CHECK(ps(0b1001) < ps(0b0111));    // {0,3} has fewer elements
  CHECK_FALSE(ps(0b11) < ps(0b11));
  CHECK(ps(0b11) != ps(0b101));

  std::vector<PSet> v{ps(0b10011), ps(0b1), ps(0b0111), ps(0b11)};
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<PSet>{ps(0b1), ps(0b11), ps(0b0111), ps(0b10011)});
}

TEST_CASE("make_pset validates membership and the identity bit") {
  FiniteMonoid z3 = fixtures::z3();
  CHECK(make_pset(z3, 0b111) == ps(0b111));
  CHECK_THROWS_AS(make_pset(z3, 0b110), MonoidError);   // missing identity
  CHECK_THROWS_AS(make_pset(z3, 0b1001), MonoidError);  // element 3 of 3
  CHECK(pset_elements(ps(0b1011)) == std::vector<ElementId>{0, 1, 3});
}

TEST_CASE("setwise products") {
  FiniteMonoid z3 = fixtures::z3();
  CHECK(pmul(z3, ps(0b011), ps(0b101)) == ps(0b111));
  CHECK(pmul(z3, ps(0b011), ps(0b011)) == ps(0b111));  // 1+1 = 2

  FiniteMonoid h2 = fixtures::h2();
  // {e,x5}{e,x4} = {e, x3, x4, x5}: x5*x4 = x3
  CHECK(pmul(h2, ps(0b100001), ps(0b010001)) == ps(0b0111001));

  // identity laws and the both-factors-embed property
  for (const FiniteMonoid& h : {fixtures::z5(), fixtures::h1()}) {
    for (PSet x : all_psets(h)) {
      CHECK(pmul(h, kIdentityOnly, x) == x);
      CHECK(pmul(h, x, kIdentityOnly) == x);
      for (PSet y : all_psets(h)) {
        PSet xy = pmul(h, x, y);
        CHECK(x.subset_of(xy));
        CHECK(y.subset_of(xy));
      }
    }
  }

  // associativity, exhaustively on a small fixture
  FiniteMonoid c3 = fixtures::chain3();
  auto sets = all_psets(c3);
  for (PSet x : sets)
    for (PSet y : sets)
      for (PSet z : sets)
        CHECK(pmul(c3, pmul(c3, x, y), z) == pmul(c3, x, pmul(c3, y, z)));
}

TEST_CASE("word products") {
  FiniteMonoid z5 = fixtures::z5();
  CHECK(word_product(z5, std::vector<PSet>{}) == kIdentityOnly);
  std::vector<PSet> w{ps(0b11), ps(0b11), ps(0b11)};
  CHECK(word_product(z5, w) == ps(0b1111));
  std::vector<PSet> v{ps(0b11), ps(0b101)};
  CHECK(word_product(z5, v) == ps(0b1111));
}

TEST_CASE("all_psets enumerates identity-containing subsets in order") {
  FiniteMonoid z3 = fixtures::z3();
  auto sets = all_psets(z3);
  REQUIRE(sets.size() == 4);
  CHECK(sets.front() == kIdentityOnly);
  CHECK(std::is_sorted(sets.begin(), sets.end()));
  for (PSet x : sets) CHECK(x.contains(0));
  CHECK(all_psets(fixtures::h1()).size() == 16);
}

TEST_CASE("divisors embed and mutual divisibility collapses to equality") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const FiniteMonoid& h : all_monoids(n)) {
      auto sets = all_psets(h);
      for (PSet a : sets) {
        for (PSet x : sets) {
          bool d = divides_p(h, a, x);
          if (d) CHECK(a.subset_of(x));
          if (d && divides_p(h, x, a)) CHECK(a == x);
          // reflexivity
          CHECK(divides_p(h, x, x));
        }
      }
    }
  }
}

TEST_CASE("irreducibility on small examples") {
  FiniteMonoid z2 = fixtures::z2();
  CHECK_FALSE(is_irreducible(z2, kIdentityOnly));
  CHECK(is_irreducible(z2, ps(0b11)));
  CHECK(is_quark(z2, ps(0b11)));
  CHECK_FALSE(is_atom(z2, ps(0b11)));  // {0,1}{0,1} = {0,1}

  FiniteMonoid z5 = fixtures::z5();
  CHECK(is_irreducible(z5, ps(0b00011)));
  CHECK(is_atom(z5, ps(0b00011)));  // 2-element, not idempotent
  CHECK_FALSE(is_irreducible(z5, ps(0b00111)));  // {0,1}{0,1}
  CHECK_FALSE(is_irreducible(z5, ps(0b01011)));  // {0,3}{0,3}
}

TEST_CASE("irreducible coincides with quark over the small census") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const FiniteMonoid& h : all_monoids(n)) {
      for (PSet x : all_psets(h)) {
        CHECK(is_irreducible(h, x) == is_quark(h, x));
        // atoms are irreducible
        if (is_atom(h, x)) CHECK(is_irreducible(h, x));
      }
    }
  }
}

TEST_CASE("irreducible non-atoms are exactly the idempotent pairs") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const FiniteMonoid& h : all_monoids(n)) {
      for (PSet x : all_psets(h)) {
        bool gap = is_irreducible(h, x) && !is_atom(h, x);
        bool pair_form = false;
        if (x.size() == 2) {
          ElementId e = pset_elements(x)[1];
          ElementId sq = h.op(e, e);
          pair_form = (sq == 0 || sq == e);
        }
        CHECK(gap == pair_form);
        if (gap) CHECK(pmul(h, x, x) == x);
      }
    }
  }
}

TEST_CASE("adjoining the identity to a divisibility antichain is irreducible") {
  FiniteMonoid z5 = fixtures::z5();
  CHECK(is_divides_antichain(z5, 0b00010));
  CHECK_FALSE(is_divides_antichain(z5, 0b00110));  // group: all associated
  CHECK(is_irreducible(z5, ps(0b00011)));

  for (unsigned n = 1; n <= 4; ++n) {
    for (const FiniteMonoid& h : all_monoids(n)) {
      ElemMask full = h.all_mask() & ~ElemMask{1};
      for (ElemMask a = 1; a <= full; ++a) {
        if ((a & ~full) || a == 0) continue;
        if (is_divides_antichain(h, a))
          CHECK(is_irreducible(h, PSet{a | 1}));
      }
    }
  }
}

TEST_CASE("irreducibles_within lists the irreducible subsets") {
  FiniteMonoid z5 = fixtures::z5();
  auto irr = irreducibles_within(z5, ps(0b01111));
  CHECK(irr == std::vector<PSet>{ps(0b00011), ps(0b00101), ps(0b01001)});
  for (PSet a : irr) CHECK(a.subset_of(ps(0b01111)));
  // within the full set, more irreducibles appear
  CHECK(irreducibles_within(z5, ps(0b11111)).size() >= 4);
}

TEST_CASE("factorizations of the identity and of irreducibles") {
  FiniteMonoid z5 = fixtures::z5();
  auto none = factorizations(z5, kIdentityOnly, 5);
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());

  // a non-idempotent irreducible factors only as itself
  auto self = factorizations(z5, ps(0b00011), 5);
  REQUIRE(self.size() == 1);
  CHECK(self[0] == FactorWord{ps(0b00011)});

  // an idempotent letter pumps up to the cap
  FiniteMonoid c2 = fixtures::chain2();
  auto pumped = factorizations(c2, ps(0b11), 3);
  REQUIRE(pumped.size() == 3);
  CHECK(pumped[0].size() == 1);
  CHECK(pumped[1].size() == 2);
  CHECK(pumped[2].size() == 3);
}

TEST_CASE("factorization words of the full set of z3") {
  FiniteMonoid z3 = fixtures::z3();
  auto words = factorizations(z3, ps(0b111), 3);
  CHECK(words.size() == 12);
  for (const auto& w : words) {
    CHECK(word_product(z3, w) == ps(0b111));
    for (PSet letter : w) CHECK(is_irreducible(z3, letter));
  }
  // max_len is respected
  for (const auto& w : factorizations(z3, ps(0b111), 2))
    CHECK(w.size() <= 2);
}

TEST_CASE("word equivalence is permutation of letters") {
  FactorWord a{ps(0b011), ps(0b101)};
  FactorWord b{ps(0b101), ps(0b011)};
  FactorWord c{ps(0b011), ps(0b011)};
  CHECK(words_equivalent(a, b));
  CHECK_FALSE(words_equivalent(a, c));
  CHECK_FALSE(words_equivalent(a, FactorWord{ps(0b011)}));
  CHECK(words_equivalent({}, {}));
  CHECK(multiset_contains(word_multiset(a), word_multiset(b)));
  CHECK(multiset_contains(word_multiset(c), {&c[0], 1}));
  CHECK_FALSE(multiset_contains({&c[0], 1}, word_multiset(c)));
}

TEST_CASE("minimal factorizations of the cyclic examples") {
  FiniteMonoid z3 = fixtures::z3();
  auto m3 = minimal_factorizations(z3, ps(0b111));
  REQUIRE(m3.size() == 3);
  std::set<std::vector<PSet>> expect3{
      {ps(0b011), ps(0b011)},
      {ps(0b011), ps(0b101)},
      {ps(0b101), ps(0b101)},
  };
  CHECK(multisets_of(m3) == expect3);

  FiniteMonoid z5 = fixtures::z5();
  auto m5 = minimal_factorizations(z5, ps(0b01111));
  REQUIRE(m5.size() == 3);
  std::set<std::vector<PSet>> expect5{
      {ps(0b00011), ps(0b00101)},
      {ps(0b00011), ps(0b00011), ps(0b00011)},
      {ps(0b00101), ps(0b01001), ps(0b01001)},
  };
  CHECK(multisets_of(m5) == expect5);
  // sorted by length first: one pair, then the two triples
  CHECK(m5[0].multiset.size() == 2);
  CHECK(m5[1].multiset.size() == 3);
  CHECK(m5[2].multiset.size() == 3);

  // each witness word really multiplies out to the set
  for (const auto& m : m5) {
    CHECK(word_product(z5, m.witness) == ps(0b01111));
    CHECK(word_multiset(m.witness) == m.multiset);
  }
}

TEST_CASE("a breakable chain has one square-free minimal multiset per set") {
  FiniteMonoid c3 = fixtures::chain3();
  auto m = minimal_factorizations(c3, ps(0b111));
  REQUIRE(m.size() == 1);
  CHECK(m[0].multiset == std::vector<PSet>{ps(0b011), ps(0b101)});

  for (PSet x : all_psets(c3)) {
    auto ms = minimal_factorizations(c3, x);
    REQUIRE(ms.size() == 1);
    ElemMask rest = x.bits & ~ElemMask{1};
    CHECK(ms[0].multiset.size() == static_cast<std::size_t>(x.size()) - 1);
    // letters are {e, x_i} for the non-identity members, each exactly once
    std::set<ElemMask> letters;
    for (PSet a : ms[0].multiset) letters.insert(a.bits & ~ElemMask{1});
    CHECK(letters.size() == ms[0].multiset.size());
    ElemMask covered = 0;
    for (ElemMask b : letters) covered |= b;
    CHECK(covered == rest);
  }
}

TEST_CASE("every irreducible has itself as its only minimal factorization") {
  for (const FiniteMonoid& h :
       {fixtures::z5(), fixtures::chain3(), fixtures::h1()}) {
    for (PSet x : all_psets(h)) {
      if (!is_irreducible(h, x)) continue;
      auto ms = minimal_factorizations(h, x);
      REQUIRE(ms.size() == 1);
      CHECK(ms[0].multiset == std::vector<PSet>{x});
    }
  }
}

TEST_CASE("minimal multisets agree with an independent sieve") {
  // the sieve enumerates everything up to the cap |X| and filters by
  // multiset inclusion; nothing of size |X| may survive it
  std::vector<FiniteMonoid> hs{fixtures::z3(), fixtures::z5(),
                               fixtures::chain3(), fixtures::h1()};
  for (const FiniteMonoid& h : hs) {
    for (PSet x : all_psets(h)) {
      auto direct = multisets_of(minimal_factorizations(h, x));
      auto sieved = minimal_by_sieve(h, x);
      CHECK(direct == sieved);
      // the length bound: never |X| letters, even with the cap at |X|
      for (const auto& m : direct)
        CHECK(m.size() <= static_cast<std::size_t>(x.size()) - 1);
    }
  }
}

TEST_CASE("every factorization multiset contains a minimal one") {
  for (const FiniteMonoid& h : {fixtures::z3(), fixtures::chain3()}) {
    for (PSet x : all_psets(h)) {
      auto minimal = multisets_of(minimal_factorizations(h, x));
      for (const auto& w : factorizations(h, x, x.size())) {
        auto letters = word_multiset(w);
        bool covered = false;
        for (const auto& m : minimal)
          if (multiset_contains(letters, m)) {
            covered = true;
            break;
          }
        CHECK(covered);
      }
    }
  }
}

TEST_CASE("square-free factorization over almost-breakable tables") {
  FiniteMonoid c3 = fixtures::chain3();
  CHECK(square_free_factorization(c3, ps(0b111)) ==
        FactorWord{ps(0b011), ps(0b101)});
  CHECK(square_free_factorization(c3, kIdentityOnly).empty());
  CHECK(square_free_factorization(c3, ps(0b011)) == FactorWord{ps(0b011)});

  CHECK_THROWS_AS(square_free_factorization(fixtures::z3(), ps(0b111)),
                  NotAlmostBreakableError);

  // product-correct, letter-distinct, two-element letters: exhaustively on
  // the almost-breakable census at order <= 4 plus the two big fixtures
  std::vector<FiniteMonoid> hs{fixtures::h1(), fixtures::h2()};
  for (unsigned n = 1; n <= 4; ++n)
    for (const FiniteMonoid& h : all_monoids(n))
      if (is_almost_breakable(h)) hs.push_back(h);
  for (const FiniteMonoid& h : hs) {
    for (PSet x : all_psets(h)) {
      FactorWord w = square_free_factorization(h, x);
      CHECK(word_product(h, w) == x);
      CHECK(w.size() == static_cast<std::size_t>(x.size()) - 1);
      std::set<ElemMask> seen;
      for (PSet a : w) {
        CHECK(a.size() == 2);
        CHECK(is_irreducible(h, a));
        CHECK(seen.insert(a.bits).second);
      }
    }
  }
}

TEST_CASE("for almost-breakable tables some minimal multiset is square-free") {
  std::vector<FiniteMonoid> hs{fixtures::h1()};
  for (unsigned n = 1; n <= 4; ++n)
    for (const FiniteMonoid& h : all_monoids(n))
      if (is_almost_breakable(h)) hs.push_back(h);
  for (const FiniteMonoid& h : hs) {
    for (PSet x : all_psets(h)) {
      bool square_free_found = false;
      for (const auto& m : minimal_factorizations(h, x)) {
        bool repeats = false;
        for (std::size_t i = 0; i + 1 < m.multiset.size(); ++i)
          if (m.multiset[i] == m.multiset[i + 1]) repeats = true;
        if (!repeats) {
          square_free_found = true;
          break;
        }
      }
      CHECK(square_free_found);
    }
  }
}
