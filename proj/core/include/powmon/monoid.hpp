// Finite magmas and monoids given by Cayley tables: validation, divisibility,
// structural predicates, and table-level constructions.
#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace powmon {

// Tables are capped so that subsets of a monoid fit in one machine word.
inline constexpr unsigned kMaxElements = 64;

using ElementId = unsigned;
using ElemMask = std::uint64_t;  // subset of the elements of one fixed table

class MonoidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Associativity failure, with the first violating triple in lex order:
// (a*b)*c != a*(b*c).
class NotAssociativeError final : public MonoidError {
 public:
  NotAssociativeError(ElementId a, ElementId b, ElementId c);
  std::array<ElementId, 3> witness;
};

// No two-sided identity exists, or the claimed one fails against `witness`.
class IdentityError final : public MonoidError {
 public:
  static IdentityError none();
  static IdentityError wrong(ElementId claimed, ElementId witness);
  std::optional<ElementId> claimed;
  std::optional<ElementId> witness;

 private:
  explicit IdentityError(const std::string& what);
};

class NotAlmostBreakableError final : public MonoidError {
 public:
  using MonoidError::MonoidError;
};

// Non-owning view of a row-major Cayley table; op(a, b) = table[a*n + b].
struct TableView {
  unsigned n = 0;
  const ElementId* table = nullptr;

  ElementId op(ElementId a, ElementId b) const { return table[a * n + b]; }
};

// A finite set with a binary operation, no axioms assumed. Associativity is
// checked on first demand and the verdict cached.
class Magma {
 public:
  Magma(unsigned size, std::vector<ElementId> table,
        std::vector<std::string> labels = {});
  Magma(const Magma& other);
  Magma& operator=(const Magma& other);
  Magma(Magma&&) noexcept = default;
  Magma& operator=(Magma&&) noexcept = default;

  unsigned size() const { return size_; }
  ElementId op(ElementId a, ElementId b) const {
    return table_[a * size_ + b];
  }
  const std::vector<ElementId>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  TableView view() const { return {size_, table_.data()}; }

  bool is_associative() const;
  // First triple (a,b,c) in lex order with (ab)c != a(bc), if any.
  std::optional<std::array<ElementId, 3>> associativity_witness() const;
  // Throws NotAssociativeError if the table is not a semigroup.
  void require_associative() const;

 private:
  unsigned size_;
  std::vector<ElementId> table_;
  std::vector<std::string> labels_;
  // -1 unknown, 0 no, 1 yes; benign race: all writers store the same value.
  mutable std::atomic<signed char> assoc_;
};

// A validated monoid. Invariants: associative, identity is element 0,
// 1 <= size <= kMaxElements. The constructor enforces all of them.
class FiniteMonoid {
 public:
  static constexpr ElementId kIdentity = 0;

  FiniteMonoid(unsigned size, std::vector<ElementId> table,
               std::vector<std::string> labels = {});

  unsigned size() const { return size_; }
  ElementId op(ElementId a, ElementId b) const {
    return table_[a * size_ + b];
  }
  const std::vector<ElementId>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label of one element; falls back to the decimal index when unlabeled.
  std::string label(ElementId x) const;
  TableView view() const { return {size_, table_.data()}; }
  Magma as_magma() const { return Magma(size_, table_, labels_); }
  ElemMask all_mask() const {
    return size_ >= 64 ? ~ElemMask{0} : (ElemMask{1} << size_) - 1;
  }

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.size_ == b.size_ && a.table_ == b.table_;
  }

 private:
  unsigned size_;
  std::vector<ElementId> table_;
  std::vector<std::string> labels_;
};

// --- validation ---

// Index of the unique two-sided identity, if one exists.
std::optional<ElementId> find_identity(const Magma& m);

// Checks the monoid axioms and normalizes the identity to index 0 (swapping
// labels along). Throws NotAssociativeError or IdentityError.
FiniteMonoid validate_monoid(const Magma& m, ElementId identity);
// Same, auto-detecting the identity; IdentityError if there is none.
FiniteMonoid validate_monoid(const Magma& m);

// --- basic arithmetic ---

inline ElementId mul(const FiniteMonoid& h, ElementId a, ElementId b) {
  return h.op(a, b);
}

// Size of the cyclic submonoid {x^k : k >= 0}, so element_order(h, 0) == 1.
unsigned element_order(const FiniteMonoid& h, ElementId x);

// Mask of two-sided invertible elements.
ElemMask units(const FiniteMonoid& h);

// Mask of HxH = {u*x*v : u, v in H}.
ElemMask principal_ideal(const FiniteMonoid& h, ElementId x);

// x divides y iff y lies in HxH, i.e. HyH is contained in HxH.
bool divides_h(const FiniteMonoid& h, ElementId x, ElementId y);

// Mutual divisibility, i.e. HxH == HyH.
bool associated_h(const FiniteMonoid& h, ElementId x, ElementId y);

struct StructureFlags {
  bool commutative = false;
  bool group = false;
  bool idempotent = false;
  bool dedekind_finite = false;   // xy = e implies yx = e
  bool acyclic = false;           // x != uxv whenever u or v is a non-unit
  bool unit_cancellative = false; // xy != x != yx for every non-unit y
  bool reduced = false;           // only unit is the identity
  bool periodic = false;          // every finite monoid
  bool aperiodic = false;         // no nontrivial finite monoid
};

StructureFlags structure_flags(const FiniteMonoid& h);

// --- breakability (semigroup-level; Magma overloads check associativity) ---

// xy lies in {x, y}.
bool is_balanced_pair(const FiniteMonoid& h, ElementId x, ElementId y);
bool is_balanced_pair(const Magma& s, ElementId x, ElementId y);

// Every ordered pair is balanced.
bool is_breakable(const FiniteMonoid& h);
bool is_breakable(const Magma& s);

// For every pair, xy or yx lands in {x, y}.
bool is_almost_breakable(const FiniteMonoid& h);
bool is_almost_breakable(const Magma& s);

// First (x,y,z,w) in lex order such that (x,y) and (z,w) are unbalanced,
// {x,y} and {z,w} are disjoint, xy is in {z,w} and zw is in {x,y}.
std::optional<std::array<ElementId, 4>> twisted_witness(const FiniteMonoid& h);

// First (a,b,c) in lex order such that (a,b), (b,c), (a,c) are all
// unbalanced and a*c is outside {a*b, b*c}.
std::optional<std::array<ElementId, 3>> bridged_witness(const FiniteMonoid& h);

// --- constructions ---

// Disjoint union of H and K where K-elements absorb H-elements on both
// sides (cross products land on the K operand). K must be a semigroup.
// K's elements are appended after H's; the identity stays at 0.
FiniteMonoid trivial_ideal_extension(const FiniteMonoid& h, const Magma& k);

// Adjoins a fresh identity in front of a semigroup.
FiniteMonoid unitization(const Magma& k, const std::string& identity_label);

// Same table with the operands swapped.
FiniteMonoid opposite(const FiniteMonoid& h);

// Every non-identity unit fixes every non-unit from both sides.
bool is_trivial_extension_of_nonunits(const FiniteMonoid& h);

// Restriction of the table to the non-units when closed (always, for finite
// tables: a product with a right inverse would itself be a unit).
std::optional<Magma> nonunit_subsemigroup(const FiniteMonoid& h);

// Relabels by a permutation with perm[0] == 0: new table of x -> perm[x].
FiniteMonoid relabel(const FiniteMonoid& h, std::span<const ElementId> perm);

// Isomorphism-class key: byte string [n | relabeled table, row-major],
// minimized lexicographically over all (n-1)! identity-fixing relabelings.
std::vector<std::uint8_t> canonical_form(const FiniteMonoid& h);

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace powmon
