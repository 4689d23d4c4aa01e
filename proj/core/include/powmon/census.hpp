// Exhaustive enumeration of finite monoids of a given order up to
// isomorphism, and classification sweeps over the result.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "powmon/classify.hpp"
#include "powmon/monoid.hpp"

namespace powmon {

// Enumeration is capped where the brute deciders stay tractable on a desk
// machine; full order 6 and the idempotent slice of order 7 are practical.
inline constexpr unsigned kMaxCensusOrder = 7;

// Calls `yield` once per isomorphism class of monoids of order n, on the
// canonical representative (the monoid whose table equals its own
// canonical form), in canonical-form order. When idempotent_only is set,
// enumeration is restricted to tables with x*x == x for every x.
void enumerate_monoids(unsigned n, bool idempotent_only,
                       const std::function<void(const FiniteMonoid&)>& yield);

std::vector<FiniteMonoid> all_monoids(unsigned n, bool idempotent_only = false);

struct CensusOptions {
  bool idempotent_only = false;
  unsigned jobs = 0;  // 0: POWMON_JOBS env var, then hardware concurrency
  ClassifyOptions classify;
};

struct CensusRecord {
  std::string canonical_hex;
  FiniteMonoid monoid;
  ClassificationReport report;
};

struct CensusSummary {
  unsigned order = 0;
  std::size_t classes = 0;
  std::map<std::string, std::size_t> flag_counts;
  std::map<std::string, std::size_t> flag_combinations;
  std::vector<std::string> unknown;             // canonical forms
  std::vector<std::string> agreement_failures;  // canonical forms
  std::size_t brute_skipped = 0;
};

struct CensusResult {
  std::vector<CensusRecord> records;  // sorted by canonical form
  CensusSummary summary;
};

// Enumerates order n and classifies every class, fanning the classification
// out over a worker pool. Deterministic: records are in canonical order and
// every worker computes pure functions of its record.
CensusResult run_census(unsigned n, const CensusOptions& opts = {});

// Signature string of one record, the key used in flag_combinations.
std::string flag_signature(const ClassificationReport& r);

// Parses "key=value" pairs joined by ',' or '&' into a record predicate.
// Keys are report fields (e.g. twisted, breakable, umf_theorem, order);
// values are true/false, yes/no/unknown, or an integer for order.
std::function<bool(const CensusRecord&)> parse_filter(const std::string& expr);

std::vector<const CensusRecord*> find_instances(
    const CensusResult& census,
    const std::function<bool(const CensusRecord&)>& pred);

}  // namespace powmon
