#include "powmon/classify.hpp"

#include <bit>

namespace powmon {

std::string to_string(TriValue v) {
  switch (v) {
    case TriValue::yes: return "yes";
    case TriValue::no: return "no";
    default: return "unknown";
  }
}

bool pm_is_atomic(const FiniteMonoid& h) {
  for (ElementId x = 1; x < h.size(); ++x) {
    ElementId sq = h.op(x, x);
    if (sq == FiniteMonoid::kIdentity || sq == x) return false;
  }
  return true;
}

BfFfResult pm_is_bf_ff(const FiniteMonoid& h) {
  if (h.size() == 1) return {true, true, std::nullopt};
  // The cyclic submonoid C of the first non-identity element is idempotent
  // as a set (C*C == C), so any factorization of C repeats indefinitely.
  ElemMask cm = 0;
  ElementId p = FiniteMonoid::kIdentity;
  do {
    cm |= ElemMask{1} << p;
    p = h.op(p, 1);
  } while (!((cm >> p) & 1));
  PSet c{cm};
  auto minimal = minimal_factorizations(h, c);
  const FactorWord& w = minimal.front().witness;
  FactorWord pumped = w;
  pumped.insert(pumped.end(), w.begin(), w.end());
  return {false, false, BfWitness{c, w, pumped}};
}

BruteResult pm_is_hmf_brute(const FiniteMonoid& h) {
  for (PSet x : all_psets(h)) {
    auto minimal = minimal_factorizations(h, x);
    for (std::size_t i = 1; i < minimal.size(); ++i)
      if (minimal[i].multiset.size() != minimal[0].multiset.size())
        return {false, PairWitness{x, minimal[0].witness, minimal[i].witness}};
  }
  return {true, std::nullopt};
}

BruteResult pm_is_umf_brute(const FiniteMonoid& h) {
  for (PSet x : all_psets(h)) {
    auto minimal = minimal_factorizations(h, x);
    if (minimal.size() > 1)
      return {false, PairWitness{x, minimal[0].witness, minimal[1].witness}};
  }
  return {true, std::nullopt};
}

namespace {

TraceEntry entry(std::string rule, std::string anchor,
                 std::vector<ElementId> witness = {}) {
  return {std::move(rule), std::move(anchor), std::move(witness)};
}

}  // namespace

UmfDecision pm_is_umf_theorem(const FiniteMonoid& h) {
  UmfDecision d;
  const unsigned n = h.size();

  for (ElementId x = 1; x < n; ++x)
    if (element_order(h, x) > 2) {
      d.trace.push_back(entry(
          "element-order",
          "an element x of order three or more gives {e,x,xx} two minimal "
          "factorizations, {e,x}*{e,x} and {e,x}*{e,xx}",
          {x}));
      d.value = TriValue::no;
      return d;
    }

  const ElemMask unit_mask = units(h);
  if (std::popcount(unit_mask) > 2) {
    std::vector<ElementId> w;
    for (ElementId x = 1; x < n && w.size() < 2; ++x)
      if ((unit_mask >> x) & 1) w.push_back(x);
    d.trace.push_back(entry(
        "unit-group-order",
        "distinct non-identity units u, v make {e,u}*{e,v} and {e,u}*{e,uv} "
        "two minimal factorizations of one set",
        w));
    d.value = TriValue::no;
    return d;
  }

  if (unit_mask == h.all_mask()) {
    d.trace.push_back(entry(
        "group",
        "over a group every set of size two or less has one factorization; "
        "groups of size three or more were excluded above"));
    d.value = n <= 2 ? TriValue::yes : TriValue::no;
    return d;
  }

  // Non-units and their closure. A product of non-units is never a unit in
  // a finite monoid, so the closure check is structural paranoia.
  std::optional<Magma> nonunits = nonunit_subsemigroup(h);
  if (!nonunits) {
    d.trace.push_back(entry(
        "nonunit-closure",
        "two non-units multiplying to a unit would make that product "
        "invertible and both factors units"));
    d.value = TriValue::no;
    return d;
  }

  {
    TableView v = nonunits->view();
    std::vector<ElementId> ids;
    for (ElementId x = 0; x < n; ++x)
      if (!((unit_mask >> x) & 1)) ids.push_back(x);
    for (ElementId a = 0; a < v.n; ++a)
      for (ElementId b = a; b < v.n; ++b) {
        ElementId ab = v.op(a, b), ba = v.op(b, a);
        if (ab != a && ab != b && ba != a && ba != b) {
          d.trace.push_back(entry(
              "nonunit-almost-breakable",
              "non-units x, y with xy and yx both outside {x,y} make "
              "{e,x,y} irreducible and {e,x,y,xy} doubly factorable",
              {ids[a], ids[b]}));
          d.value = TriValue::no;
          return d;
        }
      }
  }

  if (!is_trivial_extension_of_nonunits(h)) {
    std::vector<ElementId> w;
    for (ElementId u = 1; u < n && w.empty(); ++u) {
      if (!((unit_mask >> u) & 1)) continue;
      for (ElementId y = 1; y < n; ++y)
        if (!((unit_mask >> y) & 1) &&
            (h.op(u, y) != y || h.op(y, u) != y)) {
          w = {u, y};
          break;
        }
    }
    d.trace.push_back(entry(
        "trivial-extension",
        "a unit u and non-unit y with uy != y give {e,u}*{e,y} and "
        "{e,u}*{e,uy} as two minimal factorizations",
        w));
    d.value = TriValue::no;
    return d;
  }

  // Reduce to K = non-units plus identity; unique minimal factorization
  // transfers between H and K under the conditions established above.
  FiniteMonoid k = unitization(*nonunits, h.labels().empty() ? "" : "e");
  d.reduced_table = k.table();
  d.trace.push_back(entry(
      "reduce-to-nonunits",
      "with at most one non-identity unit acting trivially, the question "
      "reduces to the non-units with an identity adjoined"));

  if (is_breakable(k)) {
    d.trace.push_back(entry(
        "breakable",
        "over a breakable monoid every set factors uniquely into its "
        "two-element subsets"));
    d.value = TriValue::yes;
    return d;
  }

  if (structure_flags(k).commutative) {
    d.trace.push_back(entry(
        "commutative-not-breakable",
        "a commutative reduced monoid with unbreakable non-units always "
        "carries a set with two minimal factorizations"));
    d.value = TriValue::no;
    return d;
  }

  if (auto tw = twisted_witness(k)) {
    d.trace.push_back(entry(
        "twisted",
        "two crossing unbalanced pairs give {e,x,y,z,w} two minimal "
        "square-free factorizations",
        {(*tw)[0], (*tw)[1], (*tw)[2], (*tw)[3]}));
    d.value = TriValue::no;
    return d;
  }

  if (auto br = bridged_witness(k)) {
    d.trace.push_back(entry(
        "bridged",
        "a chain of three unbalanced pairs whose outer product escapes the "
        "inner products forces a second minimal factorization",
        {(*br)[0], (*br)[1], (*br)[2]}));
    d.value = TriValue::no;
    return d;
  }

  d.trace.push_back(entry(
      "open",
      "no criterion applies: almost-breakable non-commutative non-units, "
      "neither breakable nor twisted nor bridged"));
  d.value = TriValue::unknown;
  return d;
}

ClassificationReport classify(const FiniteMonoid& h,
                              const ClassifyOptions& opts) {
  ClassificationReport r;
  r.order = h.size();
  r.structure = structure_flags(h);
  r.almost_breakable = is_almost_breakable(h);
  r.breakable = is_breakable(h);
  r.twisted = twisted_witness(h);
  r.bridged = bridged_witness(h);

  r.pm_atomic = pm_is_atomic(h);
  BfFfResult bf = pm_is_bf_ff(h);
  r.pm_bf = bf.bf;
  r.pm_ff = bf.ff;
  r.bf_witness = std::move(bf.witness);
  r.pm_fmf = true;

  if (h.size() <= opts.brute_budget) {
    BruteResult hmf = pm_is_hmf_brute(h);
    r.pm_hmf = hmf.value;
    r.hmf_witness = std::move(hmf.witness);
    BruteResult umf = pm_is_umf_brute(h);
    r.pm_umf_brute = umf.value;
    r.umf_witness = std::move(umf.witness);
  } else {
    r.brute_skipped = true;
  }

  r.umf_theorem = pm_is_umf_theorem(h);
  if (r.umf_theorem.value != TriValue::unknown && r.pm_umf_brute)
    r.agreement = (r.umf_theorem.value == TriValue::yes) == *r.pm_umf_brute;
  return r;
}

}  // namespace powmon
