// JSON wire formats: Cayley table files, subset/word rendering, reports,
// census records and summaries. All numbers are integers; object keys are
// emitted in sorted order, so serialization is byte-stable.
#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "powmon/census.hpp"
#include "powmon/classify.hpp"
#include "powmon/monoid.hpp"
#include "powmon/power.hpp"

namespace powmon {

inline constexpr int kSchemaVersion = 1;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parsed table file. `identity` absent means the file describes a plain
// magma (e.g. a semigroup fixture with no identity element).
struct RawTable {
  unsigned size = 0;
  std::optional<ElementId> identity;
  std::vector<ElementId> table;
  std::vector<std::string> labels;
};

// Schema: {"size": n, "identity": i|null, "labels": [...], "table": [[...]]}
// with table[a][b] = a*b; "identity" and "labels" are optional.
RawTable parse_table(const nlohmann::json& j);
RawTable load_table_file(const std::string& path);

Magma magma_from_raw(const RawTable& raw);
// Validates and normalizes; throws IdentityError when no identity is
// designated or detectable.
FiniteMonoid monoid_from_raw(const RawTable& raw);

nlohmann::json table_to_json(const Magma& m,
                             std::optional<ElementId> identity);
nlohmann::json table_to_json(const FiniteMonoid& h);

// Subsets serialize as sorted arrays of labels when H is labeled, else of
// integer indices. Words are arrays of subsets.
nlohmann::json pset_to_json(const FiniteMonoid& h, PSet x);
nlohmann::json word_to_json(const FiniteMonoid& h, const FactorWord& w);
nlohmann::json elements_to_json(const FiniteMonoid& h,
                                std::span<const ElementId> xs);

// Parses a comma-separated list of element labels (indices accepted when
// they name elements) into a subset. The identity is implied; when the
// input omitted it, *added_identity is set so callers can warn.
PSet parse_subset_spec(const FiniteMonoid& h, const std::string& spec,
                       bool* added_identity);

nlohmann::json report_to_json(const FiniteMonoid& h,
                              const ClassificationReport& r);
nlohmann::json record_to_json(const CensusRecord& rec);
nlohmann::json summary_to_json(const CensusSummary& s);

// One record per line, in census order.
std::string census_to_jsonl(const CensusResult& census);

}  // namespace powmon
