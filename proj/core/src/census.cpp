#include "powmon/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace powmon {

namespace {

constexpr ElementId kUnset = 0xFF;

// Backtracking search over partial Cayley tables with the identity pinned
// at index 0. Each placement is followed by an incremental associativity
// check of exactly the triples whose evaluation the new cell completes, so
// every completed table is a monoid.
class Enumerator {
 public:
  Enumerator(unsigned n, bool idempotent_only,
             const std::function<void(const FiniteMonoid&)>& yield)
      : n_(n), idem_(idempotent_only), yield_(yield) {
    table_.assign(n_ * n_, kUnset);
    for (ElementId a = 0; a < n_; ++a) {
      table_[a] = a;       // identity row
      table_[a * n_] = a;  // identity column
    }
    for (ElementId a = 1; a < n_; ++a)
      for (ElementId b = 1; b < n_; ++b) cells_.push_back({a, b});
  }

  void run() { extend(0); }

 private:
  ElementId at(ElementId a, ElementId b) const { return table_[a * n_ + b]; }

  bool triple_ok(ElementId x, ElementId y, ElementId z) const {
    ElementId xy = at(x, y);
    if (xy == kUnset) return true;
    ElementId yz = at(y, z);
    if (yz == kUnset) return true;
    ElementId l = at(xy, z);
    if (l == kUnset) return true;
    ElementId r = at(x, yz);
    return r == kUnset || l == r;
  }

  // Checks the triples whose value became computable when (a,b) was set:
  // (a,b,*), (*,a,b), and the ones using (a,b) as an inner product.
  bool placement_ok(ElementId a, ElementId b) const {
    for (ElementId z = 0; z < n_; ++z)
      if (!triple_ok(a, b, z)) return false;
    for (ElementId x = 0; x < n_; ++x)
      if (!triple_ok(x, a, b)) return false;
    for (ElementId x = 1; x < n_; ++x)
      for (ElementId y = 1; y < n_; ++y) {
        ElementId xy = at(x, y);
        if (xy == a && !triple_ok(x, y, b)) return false;
        if (xy == b && !triple_ok(a, x, y)) return false;
      }
    return true;
  }

  // Prune once row 1 is complete: keep it lexicographically minimal under
  // relabelings fixing 0 and 1 (those act on row 1 alone, so the check is
  // sound this early; full dedup happens on completed tables anyway).
  bool row1_minimal() const {
    if (n_ < 4) return true;
    std::vector<ElementId> perm(n_), inv(n_);
    std::iota(perm.begin(), perm.end(), 0u);
    while (std::next_permutation(perm.begin() + 2, perm.end())) {
      for (ElementId x = 0; x < n_; ++x) inv[perm[x]] = x;
      for (ElementId b = 1; b < n_; ++b) {
        ElementId relabeled = perm[at(1, inv[b])];
        ElementId current = at(1, b);
        if (relabeled != current) {
          if (relabeled < current) return false;
          break;
        }
      }
    }
    return true;
  }

  void extend(std::size_t idx) {
    if (idx == cells_.size()) {
      complete();
      return;
    }
    auto [a, b] = cells_[idx];
    ElementId lo = 0, hi = n_;
    if (idem_ && a == b) lo = a, hi = a + 1;  // force x*x == x
    for (ElementId c = lo; c < hi; ++c) {
      table_[a * n_ + b] = c;
      if (placement_ok(a, b) &&
          !(idx + 1 == static_cast<std::size_t>(n_ - 1) && !row1_minimal()))
        extend(idx + 1);
    }
    table_[a * n_ + b] = kUnset;
  }

  void complete() {
    FiniteMonoid m(n_, std::vector<ElementId>(table_));
    std::vector<std::uint8_t> canon = canonical_form(m);
    if (!seen_.insert(canon).second) return;
    // Rebuild the canonical representative from its encoding.
    std::vector<ElementId> table(canon.begin() + 1, canon.end());
    yield_(FiniteMonoid(n_, std::move(table)));
  }

  unsigned n_;
  bool idem_;
  const std::function<void(const FiniteMonoid&)>& yield_;
  std::vector<ElementId> table_;
  std::vector<std::pair<ElementId, ElementId>> cells_;
  std::set<std::vector<std::uint8_t>> seen_;
};

unsigned resolve_jobs(unsigned requested, std::size_t tasks) {
  unsigned jobs = requested;
  if (jobs == 0) {
    if (const char* env = std::getenv("POWMON_JOBS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v > 0) jobs = static_cast<unsigned>(v);
    }
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(
      std::min<std::size_t>(jobs, std::max<std::size_t>(tasks, 1)));
}

}  // namespace

void enumerate_monoids(unsigned n, bool idempotent_only,
                       const std::function<void(const FiniteMonoid&)>& yield) {
  if (n < 1 || n > kMaxCensusOrder)
    throw MonoidError("census order must be between 1 and " +
                      std::to_string(kMaxCensusOrder));
  Enumerator e(n, idempotent_only, yield);
  e.run();
}

std::vector<FiniteMonoid> all_monoids(unsigned n, bool idempotent_only) {
  std::vector<FiniteMonoid> out;
  enumerate_monoids(n, idempotent_only,
                    [&](const FiniteMonoid& m) { out.push_back(m); });
  return out;
}

std::string flag_signature(const ClassificationReport& r) {
  std::ostringstream s;
  s << "com=" << r.structure.commutative << " grp=" << r.structure.group
    << " idm=" << r.structure.idempotent << " red=" << r.structure.reduced
    << " ab=" << r.almost_breakable << " br=" << r.breakable
    << " tw=" << r.twisted.has_value() << " bg=" << r.bridged.has_value()
    << " atom=" << r.pm_atomic << " bf=" << r.pm_bf;
  s << " hmf=" << (r.pm_hmf ? (*r.pm_hmf ? "1" : "0") : "-");
  s << " umf=" << (r.pm_umf_brute ? (*r.pm_umf_brute ? "1" : "0") : "-");
  s << " thm=" << to_string(r.umf_theorem.value);
  return s.str();
}

CensusResult run_census(unsigned n, const CensusOptions& opts) {
  std::vector<FiniteMonoid> reps = all_monoids(n, opts.idempotent_only);
  // The enumerator emits in arbitrary discovery order; fix it.
  std::vector<std::pair<std::vector<std::uint8_t>, std::size_t>> keyed;
  keyed.reserve(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    keyed.emplace_back(canonical_form(reps[i]), i);
  std::sort(keyed.begin(), keyed.end());

  CensusResult out;
  out.records.reserve(reps.size());
  for (auto& [canon, idx] : keyed)
    out.records.push_back(
        {to_hex(canon), std::move(reps[idx]), ClassificationReport{}});

  const unsigned jobs = resolve_jobs(opts.jobs, out.records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= out.records.size()) return;
      out.records[i].report = classify(out.records[i].monoid, opts.classify);
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  CensusSummary& s = out.summary;
  s.order = n;
  s.classes = out.records.size();
  auto bump = [&](const char* key, bool v) {
    if (v) ++s.flag_counts[key];
  };
  for (const CensusRecord& rec : out.records) {
    const ClassificationReport& r = rec.report;
    bump("commutative", r.structure.commutative);
    bump("group", r.structure.group);
    bump("idempotent", r.structure.idempotent);
    bump("reduced", r.structure.reduced);
    bump("almost_breakable", r.almost_breakable);
    bump("breakable", r.breakable);
    bump("twisted", r.twisted.has_value());
    bump("bridged", r.bridged.has_value());
    bump("atomic", r.pm_atomic);
    bump("bf", r.pm_bf);
    bump("hmf", r.pm_hmf.value_or(false));
    bump("umf", r.pm_umf_brute.value_or(false));
    ++s.flag_combinations[flag_signature(r)];
    if (r.umf_theorem.value == TriValue::unknown)
      s.unknown.push_back(rec.canonical_hex);
    if (!r.agreement) s.agreement_failures.push_back(rec.canonical_hex);
    if (r.brute_skipped) ++s.brute_skipped;
  }
  return out;
}

namespace {

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw MonoidError("filter value for '" + key + "' must be boolean, got '" +
                    v + "'");
}

}  // namespace

std::function<bool(const CensusRecord&)> parse_filter(
    const std::string& expr) {
  std::vector<std::function<bool(const CensusRecord&)>> clauses;
  std::string token;
  std::string normalized = expr;
  std::replace(normalized.begin(), normalized.end(), '&', ',');
  std::istringstream in(normalized);
  while (std::getline(in, token, ',')) {
    // Trim surrounding whitespace.
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    token = token.substr(b, e - b + 1);
    auto eq = token.find('=');
    if (eq == std::string::npos)
      throw MonoidError("filter clause '" + token + "' is not key=value");
    std::string key = token.substr(0, eq), value = token.substr(eq + 1);

    if (key == "order") {
      unsigned want = static_cast<unsigned>(std::stoul(value));
      clauses.push_back([want](const CensusRecord& r) {
        return r.report.order == want;
      });
      continue;
    }
    if (key == "umf_theorem") {
      if (value != "yes" && value != "no" && value != "unknown")
        throw MonoidError("umf_theorem filter takes yes/no/unknown");
      clauses.push_back([value](const CensusRecord& r) {
        return to_string(r.report.umf_theorem.value) == value;
      });
      continue;
    }
    bool want = parse_bool(value, key);
    std::function<bool(const ClassificationReport&)> get;
    if (key == "commutative")
      get = [](const ClassificationReport& r) { return r.structure.commutative; };
    else if (key == "group")
      get = [](const ClassificationReport& r) { return r.structure.group; };
    else if (key == "idempotent")
      get = [](const ClassificationReport& r) { return r.structure.idempotent; };
    else if (key == "dedekind_finite")
      get = [](const ClassificationReport& r) { return r.structure.dedekind_finite; };
    else if (key == "acyclic")
      get = [](const ClassificationReport& r) { return r.structure.acyclic; };
    else if (key == "unit_cancellative")
      get = [](const ClassificationReport& r) { return r.structure.unit_cancellative; };
    else if (key == "reduced")
      get = [](const ClassificationReport& r) { return r.structure.reduced; };
    else if (key == "aperiodic")
      get = [](const ClassificationReport& r) { return r.structure.aperiodic; };
    else if (key == "almost_breakable")
      get = [](const ClassificationReport& r) { return r.almost_breakable; };
    else if (key == "breakable")
      get = [](const ClassificationReport& r) { return r.breakable; };
    else if (key == "twisted")
      get = [](const ClassificationReport& r) { return r.twisted.has_value(); };
    else if (key == "bridged")
      get = [](const ClassificationReport& r) { return r.bridged.has_value(); };
    else if (key == "atomic")
      get = [](const ClassificationReport& r) { return r.pm_atomic; };
    else if (key == "bf")
      get = [](const ClassificationReport& r) { return r.pm_bf; };
    else if (key == "ff")
      get = [](const ClassificationReport& r) { return r.pm_ff; };
    else if (key == "fmf")
      get = [](const ClassificationReport& r) { return r.pm_fmf; };
    else if (key == "hmf")
      get = [](const ClassificationReport& r) {
        return r.pm_hmf.has_value() && *r.pm_hmf;
      };
    else if (key == "umf_brute")
      get = [](const ClassificationReport& r) {
        return r.pm_umf_brute.has_value() && *r.pm_umf_brute;
      };
    else if (key == "agreement")
      get = [](const ClassificationReport& r) { return r.agreement; };
    else
      throw MonoidError("unknown filter key '" + key + "'");
    clauses.push_back([get = std::move(get), want](const CensusRecord& r) {
      return get(r.report) == want;
    });
  }
  if (clauses.empty()) throw MonoidError("empty filter expression");
  return [clauses = std::move(clauses)](const CensusRecord& r) {
    for (const auto& c : clauses)
      if (!c(r)) return false;
    return true;
  };
}

std::vector<const CensusRecord*> find_instances(
    const CensusResult& census,
    const std::function<bool(const CensusRecord&)>& pred) {
  std::vector<const CensusRecord*> out;
  for (const CensusRecord& r : census.records)
    if (pred(r)) out.push_back(&r);
  return out;
}

}  // namespace powmon
