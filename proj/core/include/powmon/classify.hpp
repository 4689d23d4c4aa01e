// Deciders for arithmetic properties of the reduced power monoid over a
// finite ground monoid: exhaustive witness searches on one side, a
// criterion ladder on structural invariants of H on the other, and an
// aggregate report recording whether the two routes agree.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powmon/monoid.hpp"
#include "powmon/power.hpp"

namespace powmon {

enum class TriValue { yes, no, unknown };

std::string to_string(TriValue v);

// One step of the criterion ladder: which rule fired, the mathematical
// reason it decides the question, and the elements it fired on.
struct TraceEntry {
  std::string rule;
  std::string anchor;
  std::vector<ElementId> witness;
};

struct UmfDecision {
  TriValue value = TriValue::unknown;
  std::vector<TraceEntry> trace;
  // Table of the reduced monoid (non-units plus identity) when the ladder
  // got far enough to build it.
  std::optional<std::vector<ElementId>> reduced_table;
};

// Two factorizations of one set that pump to arbitrary length.
struct BfWitness {
  PSet set;
  FactorWord word;
  FactorWord pumped;  // word repeated twice, same product
};

// One set with two minimal factorizations the property forbids.
struct PairWitness {
  PSet set;
  FactorWord first;
  FactorWord second;
};

// Every non-identity element has its square outside {identity, itself}.
bool pm_is_atomic(const FiniteMonoid& h);

struct BfFfResult {
  bool bf = false;
  bool ff = false;
  std::optional<BfWitness> witness;  // present exactly when the answer is no
};

// Bounded/finite factorizations hold only for the trivial monoid: any
// cyclic submonoid C satisfies C*C == C and pumps.
BfFfResult pm_is_bf_ff(const FiniteMonoid& h);

struct BruteResult {
  bool value = false;
  std::optional<PairWitness> witness;
};

// Exhaustive check that all minimal factorizations of each X share one
// length. Witness: first X in canonical order with two lengths.
BruteResult pm_is_hmf_brute(const FiniteMonoid& h);

// Exhaustive check that each X has exactly one minimal factorization up to
// permutation. Witness: first X in canonical order with two multisets.
BruteResult pm_is_umf_brute(const FiniteMonoid& h);

// Criterion ladder deciding unique minimal factorizations from structural
// invariants of H alone; never runs a factorization search. Returns
// unknown when no criterion applies.
UmfDecision pm_is_umf_theorem(const FiniteMonoid& h);

struct ClassifyOptions {
  // Exhaustive deciders run only when h.size() <= brute_budget; above it
  // they are skipped and marked, never silently attempted.
  unsigned brute_budget = 7;
};

struct ClassificationReport {
  unsigned order = 0;
  StructureFlags structure;
  bool almost_breakable = false;
  bool breakable = false;
  std::optional<std::array<ElementId, 4>> twisted;
  std::optional<std::array<ElementId, 3>> bridged;

  bool pm_atomic = false;
  bool pm_bf = false;
  bool pm_ff = false;
  std::optional<BfWitness> bf_witness;
  bool pm_fmf = true;  // finiteness of minimal factorizations never fails

  bool brute_skipped = false;  // set when h.size() exceeded the budget
  std::optional<bool> pm_hmf;
  std::optional<PairWitness> hmf_witness;
  std::optional<bool> pm_umf_brute;
  std::optional<PairWitness> umf_witness;

  UmfDecision umf_theorem;
  // False only if the ladder decided yes/no and the exhaustive search
  // disagreed; vacuously true when either side is absent.
  bool agreement = true;
};

ClassificationReport classify(const FiniteMonoid& h,
                              const ClassifyOptions& opts = {});

}  // namespace powmon
