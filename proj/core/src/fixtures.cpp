#include "powmon/fixtures.hpp"

namespace powmon {
namespace fixtures {

namespace {

std::vector<ElementId> cyclic_table(unsigned n) {
  std::vector<ElementId> t(n * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return t;
}

std::vector<std::string> numeric_labels(unsigned n) {
  std::vector<std::string> l;
  for (unsigned i = 0; i < n; ++i) l.push_back(std::to_string(i));
  return l;
}

}  // namespace

FiniteMonoid z2() { return FiniteMonoid(2, cyclic_table(2), numeric_labels(2)); }
FiniteMonoid z3() { return FiniteMonoid(3, cyclic_table(3), numeric_labels(3)); }
FiniteMonoid z5() { return FiniteMonoid(5, cyclic_table(5), numeric_labels(5)); }

FiniteMonoid chain2() {
  return FiniteMonoid(2, {0, 1, 1, 1}, {"e", "a"});
}

FiniteMonoid chain3() {
  return FiniteMonoid(3,
                      {0, 1, 2,
                       1, 1, 2,
                       2, 2, 2},
                      {"e", "a", "f"});
}

Magma magma_s() {
  return Magma(3,
               {0, 0, 0,
                0, 1, 0,
                2, 2, 2},
               {"x", "y", "z"});
}

FiniteMonoid h1() {
  return FiniteMonoid(5,
                      {0, 1, 2, 3, 4,
                       1, 1, 1, 1, 1,
                       2, 1, 2, 1, 2,
                       3, 3, 3, 3, 3,
                       4, 3, 4, 3, 4},
                      {"e", "x1", "x2", "x3", "x4"});
}

FiniteMonoid h2() {
  return FiniteMonoid(7,
                      {0, 1, 2, 3, 4, 5, 6,
                       1, 1, 1, 1, 1, 1, 1,
                       2, 1, 2, 1, 1, 2, 6,
                       3, 3, 3, 3, 3, 3, 3,
                       4, 4, 4, 4, 4, 4, 4,
                       5, 1, 2, 3, 3, 5, 6,
                       6, 1, 2, 1, 1, 2, 6},
                      {"e", "x1", "x2", "x3", "x4", "x5", "x6"});
}

const std::vector<Fixture>& all() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out;
    auto add_monoid = [&](std::string name, std::string desc,
                          const FiniteMonoid& m) {
      out.push_back({std::move(name), std::move(desc), true, m.size(),
                     FiniteMonoid::kIdentity, m.table(), m.labels()});
    };
    add_monoid("z2", "cyclic group of order 2", z2());
    add_monoid("z3", "cyclic group of order 3", z3());
    add_monoid("z5", "cyclic group of order 5", z5());
    add_monoid("chain2", "identity plus one idempotent", chain2());
    add_monoid("chain3", "identity plus a two-step idempotent chain",
               chain3());
    Magma s = magma_s();
    out.push_back({"s",
                   "three-element semigroup, almost breakable but not "
                   "breakable; no identity",
                   false, s.size(), std::nullopt, s.table(), s.labels()});
    add_monoid("h1", "order-5 idempotent monoid, twisted and not bridged",
               h1());
    add_monoid("h2", "order-7 idempotent monoid, bridged and not twisted",
               h2());
    return out;
  }();
  return fixtures;
}

}  // namespace fixtures
}  // namespace powmon
