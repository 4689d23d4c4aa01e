#include "powmon/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace powmon {

using nlohmann::json;

RawTable parse_table(const json& j) {
  if (!j.is_object()) throw IoError("table file must be a JSON object");
  RawTable raw;
  if (!j.contains("size") || !j["size"].is_number_unsigned())
    throw IoError("missing or invalid \"size\"");
  raw.size = j["size"].get<unsigned>();
  if (j.contains("identity") && !j["identity"].is_null()) {
    if (!j["identity"].is_number_unsigned())
      throw IoError("\"identity\" must be an index");
    raw.identity = j["identity"].get<ElementId>();
  }
  if (j.contains("labels") && !j["labels"].is_null()) {
    if (!j["labels"].is_array())
      throw IoError("\"labels\" must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw IoError("labels must be strings");
      raw.labels.push_back(l.get<std::string>());
    }
  }
  if (!j.contains("table") || !j["table"].is_array())
    throw IoError("missing or invalid \"table\"");
  const auto& rows = j["table"];
  if (rows.size() != raw.size)
    throw IoError("table has " + std::to_string(rows.size()) + " rows, size " +
                  std::to_string(raw.size));
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != raw.size)
      throw IoError("every table row must list size entries");
    for (const auto& v : row) {
      if (!v.is_number_unsigned())
        throw IoError("table entries must be element indices");
      ElementId x = v.get<ElementId>();
      if (x >= raw.size)
        throw IoError("table entry " + std::to_string(x) +
                      " exceeds size " + std::to_string(raw.size));
      raw.table.push_back(x);
    }
  }
  if (raw.identity && *raw.identity >= raw.size)
    throw IoError("\"identity\" index " + std::to_string(*raw.identity) +
                  " exceeds size " + std::to_string(raw.size));
  if (!raw.labels.empty()) {
    if (raw.labels.size() != raw.size)
      throw IoError("expected " + std::to_string(raw.size) + " labels, got " +
                    std::to_string(raw.labels.size()));
    std::set<std::string> distinct(raw.labels.begin(), raw.labels.end());
    if (distinct.size() != raw.labels.size())
      throw IoError("labels must be pairwise distinct");
  }
  return raw;
}

RawTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
  return parse_table(j);
}

Magma magma_from_raw(const RawTable& raw) {
  return Magma(raw.size, raw.table, raw.labels);
}

FiniteMonoid monoid_from_raw(const RawTable& raw) {
  Magma m = magma_from_raw(raw);
  if (raw.identity) return validate_monoid(m, *raw.identity);
  return validate_monoid(m);  // auto-detect; IdentityError when absent
}

namespace {

json table_rows(TableView v) {
  json rows = json::array();
  for (ElementId a = 0; a < v.n; ++a) {
    json row = json::array();
    for (ElementId b = 0; b < v.n; ++b) row.push_back(v.op(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

json labels_json(const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l);
  return out;
}

}  // namespace

json table_to_json(const Magma& m, std::optional<ElementId> identity) {
  json j;
  j["size"] = m.size();
  if (identity) j["identity"] = *identity;
  else j["identity"] = nullptr;
  if (!m.labels().empty()) j["labels"] = labels_json(m.labels());
  j["table"] = table_rows(m.view());
  return j;
}

json table_to_json(const FiniteMonoid& h) {
  json j;
  j["size"] = h.size();
  j["identity"] = FiniteMonoid::kIdentity;
  if (!h.labels().empty()) j["labels"] = labels_json(h.labels());
  j["table"] = table_rows(h.view());
  return j;
}

json pset_to_json(const FiniteMonoid& h, PSet x) {
  json out = json::array();
  const bool labeled = !h.labels().empty();
  for (ElementId e : pset_elements(x)) {
    if (labeled) out.push_back(h.label(e));
    else out.push_back(e);
  }
  return out;
}

json word_to_json(const FiniteMonoid& h, const FactorWord& w) {
  json out = json::array();
  for (PSet letter : w) out.push_back(pset_to_json(h, letter));
  return out;
}

json elements_to_json(const FiniteMonoid& h, std::span<const ElementId> xs) {
  json out = json::array();
  const bool labeled = !h.labels().empty();
  for (ElementId e : xs) {
    if (labeled) out.push_back(h.label(e));
    else out.push_back(e);
  }
  return out;
}

PSet parse_subset_spec(const FiniteMonoid& h, const std::string& spec,
                       bool* added_identity) {
  ElemMask bits = 0;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    token = token.substr(b, e - b + 1);
    std::optional<ElementId> id;
    for (ElementId x = 0; x < h.size(); ++x)
      if (x < h.labels().size() && h.labels()[x] == token) {
        id = x;
        break;
      }
    if (!id) {
      try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(token, &pos);
        if (pos == token.size() && v < h.size())
          id = static_cast<ElementId>(v);
      } catch (const std::exception&) {
      }
    }
    if (!id) throw IoError("'" + token + "' names no element of the monoid");
    bits |= ElemMask{1} << *id;
  }
  if (bits == 0) throw IoError("empty subset specification");
  if (added_identity) *added_identity = !(bits & 1);
  return PSet{bits | 1};
}

namespace {

json tri_json(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v;
}

json trace_to_json(const FiniteMonoid& h, const UmfDecision& d) {
  json steps = json::array();
  for (const TraceEntry& t : d.trace) {
    json step;
    step["rule"] = t.rule;
    step["anchor"] = t.anchor;
    step["witness"] = elements_to_json(h, t.witness);
    steps.push_back(std::move(step));
  }
  json out;
  out["value"] = to_string(d.value);
  out["trace"] = std::move(steps);
  if (d.reduced_table) {
    unsigned k = 0;
    while (k * k < d.reduced_table->size()) ++k;
    out["reduced"] = table_rows({k, d.reduced_table->data()});
  } else {
    out["reduced"] = nullptr;
  }
  return out;
}

json pair_witness_json(const FiniteMonoid& h,
                       const std::optional<PairWitness>& w) {
  if (!w) return nullptr;
  json out;
  out["set"] = pset_to_json(h, w->set);
  out["factorizations"] =
      json::array({word_to_json(h, w->first), word_to_json(h, w->second)});
  out["lengths"] = json::array({w->first.size(), w->second.size()});
  return out;
}

}  // namespace

json report_to_json(const FiniteMonoid& h, const ClassificationReport& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["order"] = r.order;

  json st;
  st["commutative"] = r.structure.commutative;
  st["group"] = r.structure.group;
  st["idempotent"] = r.structure.idempotent;
  st["dedekind_finite"] = r.structure.dedekind_finite;
  st["acyclic"] = r.structure.acyclic;
  st["unit_cancellative"] = r.structure.unit_cancellative;
  st["reduced"] = r.structure.reduced;
  st["periodic"] = r.structure.periodic;
  st["aperiodic"] = r.structure.aperiodic;
  j["structure"] = std::move(st);

  j["almost_breakable"] = r.almost_breakable;
  j["breakable"] = r.breakable;
  {
    json t;
    t["value"] = r.twisted.has_value();
    t["witness"] = r.twisted ? elements_to_json(
                                   h, std::span<const ElementId>(*r.twisted))
                             : json(nullptr);
    j["twisted"] = std::move(t);
    json b;
    b["value"] = r.bridged.has_value();
    b["witness"] = r.bridged ? elements_to_json(
                                   h, std::span<const ElementId>(*r.bridged))
                             : json(nullptr);
    j["bridged"] = std::move(b);
  }

  json pm;
  pm["atomic"] = r.pm_atomic;
  pm["bf"] = r.pm_bf;
  pm["ff"] = r.pm_ff;
  if (r.bf_witness) {
    json w;
    w["set"] = pset_to_json(h, r.bf_witness->set);
    w["factorizations"] = json::array({word_to_json(h, r.bf_witness->word),
                                       word_to_json(h, r.bf_witness->pumped)});
    w["lengths"] = json::array(
        {r.bf_witness->word.size(), r.bf_witness->pumped.size()});
    pm["bf_witness"] = std::move(w);
  } else {
    pm["bf_witness"] = nullptr;
  }
  pm["fmf"] = r.pm_fmf;
  pm["brute_skipped"] = r.brute_skipped;
  pm["hmf"] = tri_json(r.pm_hmf);
  pm["hmf_witness"] = pair_witness_json(h, r.hmf_witness);
  pm["umf_brute"] = tri_json(r.pm_umf_brute);
  pm["umf_witness"] = pair_witness_json(h, r.umf_witness);
  pm["umf_theorem"] = trace_to_json(h, r.umf_theorem);
  pm["agreement"] = r.agreement;
  j["pm"] = std::move(pm);
  return j;
}

json record_to_json(const CensusRecord& rec) {
  json j;
  j["schema"] = kSchemaVersion;
  j["order"] = rec.monoid.size();
  j["canonical"] = rec.canonical_hex;
  // self-contained: the table value is itself a loadable table file
  j["table"] = table_to_json(rec.monoid);
  j["report"] = report_to_json(rec.monoid, rec.report);
  return j;
}

json summary_to_json(const CensusSummary& s) {
  json j;
  j["schema"] = kSchemaVersion;
  j["order"] = s.order;
  j["classes"] = s.classes;
  json counts;
  for (const auto& [k, v] : s.flag_counts) counts[k] = v;
  j["flag_counts"] = std::move(counts);
  json combos;
  for (const auto& [k, v] : s.flag_combinations) combos[k] = v;
  j["flag_combinations"] = std::move(combos);
  j["unknown"] = s.unknown;
  j["agreement_failures"] = s.agreement_failures;
  j["brute_skipped"] = s.brute_skipped;
  return j;
}

std::string census_to_jsonl(const CensusResult& census) {
  std::string out;
  for (const CensusRecord& rec : census.records) {
    out += record_to_json(rec).dump();
    out += '\n';
  }
  return out;
}

}  // namespace powmon
