// Built-in example tables used by the test suites and shipped as JSON
// fixture files: small cyclic groups, idempotent chains, and the
// hand-picked monoids exercising the twisted/bridged obstructions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powmon/monoid.hpp"

namespace powmon {
namespace fixtures {

// Cyclic groups Z/2, Z/3, Z/5 with additive labels "0", "1", ...
FiniteMonoid z2();
FiniteMonoid z3();
FiniteMonoid z5();

// {e, a} with a*a == a.
FiniteMonoid chain2();

// {e, a, f}: a, f idempotent, a*f == f*a == f (a two-step chain of ideals).
FiniteMonoid chain3();

// Three-element semigroup over {x, y, z} with y*z == x: almost breakable
// but not breakable, and not a monoid.
Magma magma_s();

// Order-5 monoid (four idempotents plus identity) whose only unbalanced
// pairs (x2,x3) and (x4,x1) cross each other: twisted, not bridged.
FiniteMonoid h1();

// Order-7 idempotent monoid that is bridged but not twisted; the reported
// bridge triple is (x6,x5,x4).
FiniteMonoid h2();

struct Fixture {
  std::string name;
  std::string description;
  bool is_monoid = true;
  // Table payload as stored on disk.
  unsigned size = 0;
  std::optional<ElementId> identity;
  std::vector<ElementId> table;
  std::vector<std::string> labels;
};

// All fixtures in stable order: z2, z3, z5, chain2, chain3, s, h1, h2.
const std::vector<Fixture>& all();

}  // namespace fixtures
}  // namespace powmon
