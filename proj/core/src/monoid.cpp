#include "powmon/monoid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace powmon {

namespace {

std::string triple_message(ElementId a, ElementId b, ElementId c) {
  return "not associative: (" + std::to_string(a) + "*" + std::to_string(b) +
         ")*" + std::to_string(c) + " != " + std::to_string(a) + "*(" +
         std::to_string(b) + "*" + std::to_string(c) + ")";
}

void check_table_shape(unsigned size, const std::vector<ElementId>& table) {
  if (size > kMaxElements)
    throw MonoidError("table too large: " + std::to_string(size) +
                      " elements (max " + std::to_string(kMaxElements) + ")");
  if (table.size() != static_cast<std::size_t>(size) * size)
    throw MonoidError("table is not " + std::to_string(size) + "x" +
                      std::to_string(size));
  for (ElementId v : table)
    if (v >= size)
      throw MonoidError("table entry " + std::to_string(v) +
                        " out of range [0," + std::to_string(size) + ")");
}

void check_labels(unsigned size, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != size)
    throw MonoidError("expected " + std::to_string(size) + " labels, got " +
                      std::to_string(labels.size()));
}

std::optional<std::array<ElementId, 3>> scan_associativity(TableView v) {
  for (ElementId a = 0; a < v.n; ++a)
    for (ElementId b = 0; b < v.n; ++b)
      for (ElementId c = 0; c < v.n; ++c)
        if (v.op(v.op(a, b), c) != v.op(a, v.op(b, c)))
          return std::array<ElementId, 3>{a, b, c};
  return std::nullopt;
}

}  // namespace

NotAssociativeError::NotAssociativeError(ElementId a, ElementId b, ElementId c)
    : MonoidError(triple_message(a, b, c)), witness{a, b, c} {}

IdentityError::IdentityError(const std::string& what) : MonoidError(what) {}

IdentityError IdentityError::none() {
  return IdentityError("no two-sided identity element");
}

IdentityError IdentityError::wrong(ElementId claimed, ElementId witness) {
  IdentityError e("element " + std::to_string(claimed) +
                  " is not a two-sided identity (fails on " +
                  std::to_string(witness) + ")");
  e.claimed = claimed;
  e.witness = witness;
  return e;
}

Magma::Magma(unsigned size, std::vector<ElementId> table,
             std::vector<std::string> labels)
    : size_(size),
      table_(std::move(table)),
      labels_(std::move(labels)),
      assoc_(-1) {
  check_table_shape(size_, table_);
  check_labels(size_, labels_);
}

Magma::Magma(const Magma& other)
    : size_(other.size_),
      table_(other.table_),
      labels_(other.labels_),
      assoc_(other.assoc_.load()) {}

Magma& Magma::operator=(const Magma& other) {
  if (this != &other) {
    size_ = other.size_;
    table_ = other.table_;
    labels_ = other.labels_;
    assoc_.store(other.assoc_.load());
  }
  return *this;
}

bool Magma::is_associative() const {
  signed char cached = assoc_.load();
  if (cached >= 0) return cached == 1;
  bool ok = !scan_associativity(view()).has_value();
  assoc_.store(ok ? 1 : 0);
  return ok;
}

std::optional<std::array<ElementId, 3>> Magma::associativity_witness() const {
  if (assoc_.load() == 1) return std::nullopt;
  auto w = scan_associativity(view());
  assoc_.store(w ? 0 : 1);
  return w;
}

void Magma::require_associative() const {
  if (auto w = associativity_witness())
    throw NotAssociativeError((*w)[0], (*w)[1], (*w)[2]);
}

FiniteMonoid::FiniteMonoid(unsigned size, std::vector<ElementId> table,
                           std::vector<std::string> labels)
    : size_(size), table_(std::move(table)), labels_(std::move(labels)) {
  if (size_ == 0) throw MonoidError("a monoid has at least one element");
  check_table_shape(size_, table_);
  check_labels(size_, labels_);
  TableView v{size_, table_.data()};
  for (ElementId a = 0; a < size_; ++a)
    if (v.op(0, a) != a || v.op(a, 0) != a)
      throw IdentityError::wrong(0, a);
  if (auto w = scan_associativity(v))
    throw NotAssociativeError((*w)[0], (*w)[1], (*w)[2]);
}

std::string FiniteMonoid::label(ElementId x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

std::optional<ElementId> find_identity(const Magma& m) {
  for (ElementId e = 0; e < m.size(); ++e) {
    bool ok = true;
    for (ElementId a = 0; a < m.size() && ok; ++a)
      ok = m.op(e, a) == a && m.op(a, e) == a;
    if (ok) return e;  // a two-sided identity is unique
  }
  return std::nullopt;
}

FiniteMonoid validate_monoid(const Magma& m, ElementId identity) {
  if (identity >= m.size())
    throw MonoidError("identity index " + std::to_string(identity) +
                      " out of range");
  for (ElementId a = 0; a < m.size(); ++a)
    if (m.op(identity, a) != a || m.op(a, identity) != a)
      throw IdentityError::wrong(identity, a);
  m.require_associative();
  if (identity == 0)
    return FiniteMonoid(m.size(), m.table(), m.labels());
  // Swap the identity down to index 0.
  std::vector<ElementId> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::swap(perm[0], perm[identity]);
  std::vector<ElementId> table(m.size() * m.size());
  for (ElementId a = 0; a < m.size(); ++a)
    for (ElementId b = 0; b < m.size(); ++b)
      table[perm[a] * m.size() + perm[b]] = perm[m.op(a, b)];
  std::vector<std::string> labels = m.labels();
  if (!labels.empty()) std::swap(labels[0], labels[identity]);
  return FiniteMonoid(m.size(), std::move(table), std::move(labels));
}

FiniteMonoid validate_monoid(const Magma& m) {
  auto e = find_identity(m);
  if (!e) throw IdentityError::none();
  return validate_monoid(m, *e);
}

unsigned element_order(const FiniteMonoid& h, ElementId x) {
  ElemMask seen = ElemMask{1} << FiniteMonoid::kIdentity;
  ElementId p = FiniteMonoid::kIdentity;
  unsigned count = 1;
  for (;;) {
    p = h.op(p, x);
    ElemMask bit = ElemMask{1} << p;
    if (seen & bit) return count;
    seen |= bit;
    ++count;
  }
}

ElemMask units(const FiniteMonoid& h) {
  ElemMask result = 0;
  for (ElementId x = 0; x < h.size(); ++x)
    for (ElementId y = 0; y < h.size(); ++y)
      if (h.op(x, y) == FiniteMonoid::kIdentity &&
          h.op(y, x) == FiniteMonoid::kIdentity) {
        result |= ElemMask{1} << x;
        break;
      }
  return result;
}

ElemMask principal_ideal(const FiniteMonoid& h, ElementId x) {
  ElemMask result = 0;
  for (ElementId u = 0; u < h.size(); ++u) {
    ElementId ux = h.op(u, x);
    for (ElementId v = 0; v < h.size(); ++v)
      result |= ElemMask{1} << h.op(ux, v);
  }
  return result;
}

bool divides_h(const FiniteMonoid& h, ElementId x, ElementId y) {
  return (principal_ideal(h, x) >> y) & 1;
}

bool associated_h(const FiniteMonoid& h, ElementId x, ElementId y) {
  return principal_ideal(h, x) == principal_ideal(h, y);
}

StructureFlags structure_flags(const FiniteMonoid& h) {
  const unsigned n = h.size();
  StructureFlags f;
  f.periodic = true;
  f.aperiodic = n == 1;

  f.commutative = true;
  for (ElementId a = 0; a < n && f.commutative; ++a)
    for (ElementId b = a + 1; b < n && f.commutative; ++b)
      f.commutative = h.op(a, b) == h.op(b, a);

  f.idempotent = true;
  for (ElementId a = 0; a < n && f.idempotent; ++a)
    f.idempotent = h.op(a, a) == a;

  const ElemMask u = units(h);
  f.group = u == h.all_mask();
  f.reduced = u == ElemMask{1};

  f.dedekind_finite = true;
  for (ElementId x = 0; x < n && f.dedekind_finite; ++x)
    for (ElementId y = 0; y < n && f.dedekind_finite; ++y)
      if (h.op(x, y) == FiniteMonoid::kIdentity)
        f.dedekind_finite = h.op(y, x) == FiniteMonoid::kIdentity;

  f.acyclic = true;
  for (ElementId x = 0; x < n && f.acyclic; ++x)
    for (ElementId a = 0; a < n && f.acyclic; ++a)
      for (ElementId b = 0; b < n && f.acyclic; ++b) {
        bool some_nonunit = !((u >> a) & 1) || !((u >> b) & 1);
        if (some_nonunit && h.op(h.op(a, x), b) == x) f.acyclic = false;
      }

  f.unit_cancellative = true;
  for (ElementId x = 0; x < n && f.unit_cancellative; ++x)
    for (ElementId y = 0; y < n && f.unit_cancellative; ++y)
      if (!((u >> y) & 1) && (h.op(x, y) == x || h.op(y, x) == x))
        f.unit_cancellative = false;

  return f;
}

namespace {

bool balanced(TableView v, ElementId x, ElementId y) {
  ElementId p = v.op(x, y);
  return p == x || p == y;
}

bool breakable_view(TableView v) {
  for (ElementId x = 0; x < v.n; ++x)
    for (ElementId y = 0; y < v.n; ++y)
      if (!balanced(v, x, y)) return false;
  return true;
}

bool almost_breakable_view(TableView v) {
  for (ElementId x = 0; x < v.n; ++x)
    for (ElementId y = x; y < v.n; ++y)
      if (!balanced(v, x, y) && !balanced(v, y, x)) return false;
  return true;
}

}  // namespace

bool is_balanced_pair(const FiniteMonoid& h, ElementId x, ElementId y) {
  return balanced(h.view(), x, y);
}

bool is_balanced_pair(const Magma& s, ElementId x, ElementId y) {
  s.require_associative();
  return balanced(s.view(), x, y);
}

bool is_breakable(const FiniteMonoid& h) { return breakable_view(h.view()); }

bool is_breakable(const Magma& s) {
  s.require_associative();
  return breakable_view(s.view());
}

bool is_almost_breakable(const FiniteMonoid& h) {
  return almost_breakable_view(h.view());
}

bool is_almost_breakable(const Magma& s) {
  s.require_associative();
  return almost_breakable_view(s.view());
}

std::optional<std::array<ElementId, 4>> twisted_witness(
    const FiniteMonoid& h) {
  TableView v = h.view();
  for (ElementId x = 0; x < v.n; ++x)
    for (ElementId y = 0; y < v.n; ++y) {
      if (balanced(v, x, y)) continue;
      for (ElementId z = 0; z < v.n; ++z) {
        if (z == x || z == y) continue;
        for (ElementId w = 0; w < v.n; ++w) {
          if (w == x || w == y || balanced(v, z, w)) continue;
          ElementId xy = v.op(x, y), zw = v.op(z, w);
          if ((xy == z || xy == w) && (zw == x || zw == y))
            return std::array<ElementId, 4>{x, y, z, w};
        }
      }
    }
  return std::nullopt;
}

std::optional<std::array<ElementId, 3>> bridged_witness(
    const FiniteMonoid& h) {
  TableView v = h.view();
  for (ElementId a = 0; a < v.n; ++a)
    for (ElementId b = 0; b < v.n; ++b) {
      if (balanced(v, a, b)) continue;
      for (ElementId c = 0; c < v.n; ++c) {
        if (balanced(v, b, c) || balanced(v, a, c)) continue;
        ElementId ac = v.op(a, c);
        if (ac != v.op(a, b) && ac != v.op(b, c))
          return std::array<ElementId, 3>{a, b, c};
      }
    }
  return std::nullopt;
}

FiniteMonoid trivial_ideal_extension(const FiniteMonoid& h, const Magma& k) {
  k.require_associative();
  const unsigned nh = h.size(), nk = k.size(), n = nh + nk;
  if (n > kMaxElements) throw MonoidError("extension exceeds element cap");
  std::vector<ElementId> table(static_cast<std::size_t>(n) * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      ElementId r;
      if (a < nh && b < nh) r = h.op(a, b);
      else if (a >= nh && b >= nh) r = nh + k.op(a - nh, b - nh);
      else r = a >= nh ? a : b;  // the K-side operand absorbs
      table[a * n + b] = r;
    }
  std::vector<std::string> labels;
  if (!h.labels().empty() || !k.labels().empty()) {
    labels.reserve(n);
    for (ElementId a = 0; a < nh; ++a) labels.push_back(h.label(a));
    for (ElementId a = 0; a < nk; ++a)
      labels.push_back(a < k.labels().size() ? k.labels()[a]
                                             : std::to_string(nh + a));
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = a + 1; b < n; ++b)
        if (labels[a] == labels[b])
          throw MonoidError("label collision in extension: " + labels[a]);
  }
  return FiniteMonoid(n, std::move(table), std::move(labels));
}

FiniteMonoid unitization(const Magma& k, const std::string& identity_label) {
  std::vector<std::string> labels;
  if (!k.labels().empty()) labels = {identity_label};
  FiniteMonoid trivial(1, {0}, std::move(labels));
  return trivial_ideal_extension(trivial, k);
}

FiniteMonoid opposite(const FiniteMonoid& h) {
  const unsigned n = h.size();
  std::vector<ElementId> table(static_cast<std::size_t>(n) * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) table[a * n + b] = h.op(b, a);
  return FiniteMonoid(n, std::move(table), h.labels());
}

bool is_trivial_extension_of_nonunits(const FiniteMonoid& h) {
  const ElemMask u = units(h);
  for (ElementId x = 1; x < h.size(); ++x) {
    if (!((u >> x) & 1)) continue;
    for (ElementId y = 0; y < h.size(); ++y)
      if (!((u >> y) & 1) && (h.op(x, y) != y || h.op(y, x) != y))
        return false;
  }
  return true;
}

std::optional<Magma> nonunit_subsemigroup(const FiniteMonoid& h) {
  const ElemMask u = units(h);
  std::vector<ElementId> members;
  std::vector<ElementId> index(h.size(), kMaxElements);
  for (ElementId x = 0; x < h.size(); ++x)
    if (!((u >> x) & 1)) {
      index[x] = static_cast<ElementId>(members.size());
      members.push_back(x);
    }
  const unsigned n = static_cast<unsigned>(members.size());
  std::vector<ElementId> table(static_cast<std::size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      ElementId p = h.op(members[a], members[b]);
      if (index[p] == kMaxElements) return std::nullopt;  // escaped to a unit
      table[a * n + b] = index[p];
    }
  std::vector<std::string> labels;
  if (!h.labels().empty())
    for (ElementId x : members) labels.push_back(h.label(x));
  return Magma(n, std::move(table), std::move(labels));
}

FiniteMonoid relabel(const FiniteMonoid& h, std::span<const ElementId> perm) {
  const unsigned n = h.size();
  if (perm.size() != n || perm[0] != 0)
    throw MonoidError("relabel needs an identity-fixing permutation");
  std::vector<ElementId> table(static_cast<std::size_t>(n) * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      table[perm[a] * n + perm[b]] = perm[h.op(a, b)];
  std::vector<std::string> labels;
  if (!h.labels().empty()) {
    labels.resize(n);
    for (ElementId a = 0; a < n; ++a) labels[perm[a]] = h.labels()[a];
  }
  return FiniteMonoid(n, std::move(table), std::move(labels));
}

std::vector<std::uint8_t> canonical_form(const FiniteMonoid& h) {
  const unsigned n = h.size();
  std::vector<ElementId> perm(n), inv(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::uint8_t> best, cur;
  best.reserve(1 + n * n);
  cur.reserve(1 + n * n);
  do {
    for (ElementId x = 0; x < n; ++x) inv[perm[x]] = x;
    cur.clear();
    cur.push_back(static_cast<std::uint8_t>(n));
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        // Row-major entry (a,b) of the table relabeled by perm.
        cur.push_back(static_cast<std::uint8_t>(perm[h.op(inv[a], inv[b])]));
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

}  // namespace powmon
