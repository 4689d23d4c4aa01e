// Command-line front end: validation, classification, factorization and
// census runs over Cayley-table JSON files. All reports go to stdout as
// JSON (indented with --pretty); diagnostics go to stderr.
//
// Exit codes: 0 success, 1 usage or internal disagreement, 2 validation or
// input errors, 3 exhausted search budget.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "powmon/census.hpp"
#include "powmon/classify.hpp"
#include "powmon/fixtures.hpp"
#include "powmon/io.hpp"
#include "powmon/monoid.hpp"
#include "powmon/power.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

using nlohmann::json;

void emit(const json& j, bool pretty) {
  if (pretty) std::cout << j.dump(2) << '\n';
  else std::cout << j.dump() << '\n';
}

powmon::FiniteMonoid load_monoid(const std::string& path) {
  return powmon::monoid_from_raw(powmon::load_table_file(path));
}

powmon::PSet parse_subset(const powmon::FiniteMonoid& h,
                          const std::string& spec) {
  bool added = false;
  powmon::PSet x = powmon::parse_subset_spec(h, spec, &added);
  if (added)
    std::cerr << "warning: identity element was not listed; it is always "
                 "included\n";
  return x;
}

int cmd_validate(const std::string& path, bool pretty) {
  powmon::RawTable raw = powmon::load_table_file(path);
  json out;
  if (raw.identity) {
    powmon::FiniteMonoid h = powmon::monoid_from_raw(raw);
    out["kind"] = "monoid";
    out["valid"] = true;
    out["size"] = h.size();
    out["identity_normalized_to"] = powmon::FiniteMonoid::kIdentity;
    out["canonical"] = powmon::to_hex(powmon::canonical_form(h));
  } else {
    powmon::Magma m = powmon::magma_from_raw(raw);
    m.require_associative();
    out["kind"] = "semigroup";
    out["valid"] = true;
    out["size"] = m.size();
    out["identity"] = nullptr;
  }
  emit(out, pretty);
  return kExitOk;
}

int cmd_classify(const std::string& path, unsigned budget, bool pretty) {
  powmon::RawTable raw = powmon::load_table_file(path);
  if (!raw.identity && !powmon::find_identity(powmon::magma_from_raw(raw))) {
    // Semigroup-only input: report the table-level flags that make sense.
    powmon::Magma m = powmon::magma_from_raw(raw);
    m.require_associative();
    json out;
    out["schema"] = powmon::kSchemaVersion;
    out["kind"] = "semigroup";
    out["order"] = m.size();
    out["almost_breakable"] = powmon::is_almost_breakable(m);
    out["breakable"] = powmon::is_breakable(m);
    emit(out, pretty);
    return kExitOk;
  }
  powmon::FiniteMonoid h = powmon::monoid_from_raw(raw);
  powmon::ClassifyOptions opts;
  opts.brute_budget = budget;
  powmon::ClassificationReport r = powmon::classify(h, opts);
  json out = powmon::report_to_json(h, r);
  out["kind"] = "monoid";
  emit(out, pretty);
  if (!r.agreement) {
    std::cerr << "error: criterion ladder disagrees with the exhaustive "
                 "search\n";
    return kExitUsage;
  }
  if (r.brute_skipped) {
    std::cerr << "warning: exhaustive deciders skipped, order "
              << h.size() << " exceeds budget " << budget << '\n';
    return kExitBudget;
  }
  return kExitOk;
}

int cmd_factorize(const std::string& path, const std::string& set_spec,
                  unsigned max_len, bool pretty) {
  powmon::FiniteMonoid h = load_monoid(path);
  powmon::PSet x = parse_subset(h, set_spec);
  auto words = powmon::factorizations(h, x, max_len);
  json out;
  out["schema"] = powmon::kSchemaVersion;
  out["set"] = powmon::pset_to_json(h, x);
  out["max_len"] = max_len;
  json list = json::array();
  for (const auto& w : words) list.push_back(powmon::word_to_json(h, w));
  out["factorizations"] = std::move(list);
  out["count"] = words.size();
  emit(out, pretty);
  return kExitOk;
}

int cmd_minfactor(const std::string& path, const std::string& set_spec,
                  bool pretty) {
  powmon::FiniteMonoid h = load_monoid(path);
  powmon::PSet x = parse_subset(h, set_spec);
  auto minimal = powmon::minimal_factorizations(h, x);
  json out;
  out["schema"] = powmon::kSchemaVersion;
  out["set"] = powmon::pset_to_json(h, x);
  json list = json::array();
  for (const auto& mf : minimal) {
    json e;
    json letters = json::array();
    for (powmon::PSet l : mf.multiset)
      letters.push_back(powmon::pset_to_json(h, l));
    e["multiset"] = std::move(letters);
    e["witness"] = powmon::word_to_json(h, mf.witness);
    e["length"] = mf.multiset.size();
    list.push_back(std::move(e));
  }
  out["minimal_factorizations"] = std::move(list);
  out["count"] = minimal.size();
  emit(out, pretty);
  return kExitOk;
}

int cmd_irreducibles(const std::string& path, const std::string& set_spec,
                     bool pretty) {
  powmon::FiniteMonoid h = load_monoid(path);
  powmon::PSet x = set_spec.empty() ? powmon::PSet{h.all_mask()}
                                    : parse_subset(h, set_spec);
  auto irr = powmon::irreducibles_within(h, x);
  json out;
  out["schema"] = powmon::kSchemaVersion;
  out["within"] = powmon::pset_to_json(h, x);
  json list = json::array();
  for (powmon::PSet s : irr) list.push_back(powmon::pset_to_json(h, s));
  out["irreducibles"] = std::move(list);
  out["count"] = irr.size();
  emit(out, pretty);
  return kExitOk;
}

int census_exit(const powmon::CensusSummary& s) {
  if (!s.agreement_failures.empty()) {
    std::cerr << "error: " << s.agreement_failures.size()
              << " classes where the criterion ladder disagrees with the "
                 "exhaustive search\n";
    return kExitUsage;
  }
  if (s.brute_skipped > 0) {
    std::cerr << "warning: exhaustive deciders skipped for "
              << s.brute_skipped << " classes (budget)\n";
    return kExitBudget;
  }
  return kExitOk;
}

int cmd_census(unsigned order, const std::string& out_dir, unsigned budget,
               bool idempotent_only, unsigned jobs, bool pretty) {
  powmon::CensusOptions opts;
  opts.idempotent_only = idempotent_only;
  opts.jobs = jobs;
  opts.classify.brute_budget = budget;
  powmon::CensusResult census = powmon::run_census(order, opts);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::filesystem::path dir(out_dir);
    auto records_path = dir / ("census-" + std::to_string(order) + ".jsonl");
    auto summary_path = dir / ("summary-" + std::to_string(order) + ".json");
    std::ofstream rec_out(records_path, std::ios::binary);
    rec_out << powmon::census_to_jsonl(census);
    std::ofstream sum_out(summary_path, std::ios::binary);
    sum_out << powmon::summary_to_json(census.summary).dump(2) << '\n';
    if (!rec_out || !sum_out)
      throw powmon::IoError("failed writing census files to " + out_dir);
    std::cerr << "wrote " << records_path.string() << " and "
              << summary_path.string() << '\n';
  }
  emit(powmon::summary_to_json(census.summary), pretty);
  return census_exit(census.summary);
}

int cmd_find(const std::string& filter_expr, unsigned max_order,
             unsigned budget, bool idempotent_only, unsigned jobs,
             bool pretty) {
  auto pred = powmon::parse_filter(filter_expr);
  json matches = json::array();
  std::size_t agreement_failures = 0, skipped = 0;
  for (unsigned n = 1; n <= max_order; ++n) {
    powmon::CensusOptions opts;
    opts.idempotent_only = idempotent_only;
    opts.jobs = jobs;
    opts.classify.brute_budget = budget;
    powmon::CensusResult census = powmon::run_census(n, opts);
    agreement_failures += census.summary.agreement_failures.size();
    skipped += census.summary.brute_skipped;
    for (const powmon::CensusRecord* rec :
         powmon::find_instances(census, pred))
      matches.push_back(powmon::record_to_json(*rec));
  }
  json out;
  out["schema"] = powmon::kSchemaVersion;
  out["filter"] = filter_expr;
  out["max_order"] = max_order;
  out["matches"] = std::move(matches);
  out["count"] = out["matches"].size();
  emit(out, pretty);
  if (agreement_failures > 0) {
    std::cerr << "error: " << agreement_failures << " agreement failures\n";
    return kExitUsage;
  }
  return skipped > 0 ? kExitBudget : kExitOk;
}

int cmd_fixtures(const std::string& dir, bool pretty) {
  json out = json::array();
  for (const powmon::fixtures::Fixture& f : powmon::fixtures::all()) {
    json entry;
    entry["name"] = f.name;
    entry["kind"] = f.is_monoid ? "monoid" : "semigroup";
    entry["size"] = f.size;
    entry["description"] = f.description;
    if (!dir.empty()) {
      json file;
      file["size"] = f.size;
      if (f.identity) file["identity"] = *f.identity;
      else file["identity"] = nullptr;
      file["labels"] = f.labels;
      json rows = json::array();
      for (unsigned a = 0; a < f.size; ++a) {
        json row = json::array();
        for (unsigned b = 0; b < f.size; ++b)
          row.push_back(f.table[a * f.size + b]);
        rows.push_back(std::move(row));
      }
      file["table"] = std::move(rows);
      std::filesystem::create_directories(dir);
      auto path = std::filesystem::path(dir) / (f.name + ".json");
      std::ofstream fout(path, std::ios::binary);
      fout << file.dump(2) << '\n';
      if (!fout) throw powmon::IoError("failed writing " + path.string());
      entry["path"] = path.string();
    }
    out.push_back(std::move(entry));
  }
  emit(out, pretty);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Arithmetic of reduced power monoids over finite ground monoids"};
  app.require_subcommand(1);
  app.fallthrough();  // let subcommands use the global flags below
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string path, set_spec, out_dir, filter_expr, fixtures_dir;
  unsigned max_len = 6, budget = 7, order = 1, jobs = 0;
  bool idempotent_only = false;

  auto* validate = app.add_subcommand(
      "validate", "check the monoid axioms of a table file");
  validate->add_option("path", path, "Cayley table JSON file")->required();

  auto* classify = app.add_subcommand(
      "classify", "full structural and arithmetic report for one table");
  classify->add_option("path", path)->required();
  classify->add_option("--budget", budget,
                       "largest order the exhaustive deciders run at");

  auto* factorize = app.add_subcommand(
      "factorize", "all bounded-length factorizations of a subset");
  factorize->add_option("path", path)->required();
  factorize->add_option("--set", set_spec, "comma-separated element labels")
      ->required();
  factorize->add_option("--max-len", max_len, "word length cap")->required();

  auto* minfactor = app.add_subcommand(
      "minfactor", "minimal factorizations of a subset");
  minfactor->add_option("path", path)->required();
  minfactor->add_option("--set", set_spec)->required();

  auto* irreducibles = app.add_subcommand(
      "irreducibles", "irreducible subsets inside a subset (default: all)");
  irreducibles->add_option("path", path)->required();
  irreducibles->add_option("--set", set_spec);

  auto* census = app.add_subcommand(
      "census", "enumerate and classify all monoids of one order");
  census->add_option("order", order, "monoid order (1-7)")->required();
  census->add_option("--out", out_dir, "directory for census-N.jsonl and "
                                       "summary-N.json");
  census->add_option("--budget", budget);
  census->add_flag("--idempotent-only", idempotent_only,
                   "restrict to tables with x*x == x");
  census->add_option("--jobs", jobs, "worker threads (default POWMON_JOBS "
                                     "or hardware)");

  auto* find = app.add_subcommand(
      "find", "search censuses of order 1..N for matching classes");
  find->add_option("filter", filter_expr,
                   "key=value[,key=value...] over report fields")
      ->required();
  find->add_option("--order", order, "largest order searched")->required();
  find->add_option("--budget", budget);
  find->add_flag("--idempotent-only", idempotent_only);
  find->add_option("--jobs", jobs);

  auto* fixtures = app.add_subcommand(
      "fixtures", "list built-in example tables; --dir writes them out");
  fixtures->add_option("--dir", fixtures_dir, "directory to write JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, pretty);
    if (classify->parsed()) return cmd_classify(path, budget, pretty);
    if (factorize->parsed())
      return cmd_factorize(path, set_spec, max_len, pretty);
    if (minfactor->parsed()) return cmd_minfactor(path, set_spec, pretty);
    if (irreducibles->parsed())
      return cmd_irreducibles(path, set_spec, pretty);
    if (census->parsed())
      return cmd_census(order, out_dir, budget, idempotent_only, jobs,
                        pretty);
    if (find->parsed())
      return cmd_find(filter_expr, order, budget, idempotent_only, jobs,
                      pretty);
    if (fixtures->parsed()) return cmd_fixtures(fixtures_dir, pretty);
  } catch (const powmon::NotAssociativeError& e) {
    json err;
    err["valid"] = false;
    err["error"] = "not_associative";
    err["witness"] = e.witness;
    err["message"] = e.what();
    std::cout << err.dump() << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const powmon::IdentityError& e) {
    json err;
    err["valid"] = false;
    err["error"] = e.claimed ? "wrong_identity" : "no_identity";
    if (e.claimed) err["claimed"] = *e.claimed;
    if (e.witness) err["witness"] = *e.witness;
    err["message"] = e.what();
    std::cout << err.dump() << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const powmon::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const powmon::MonoidError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
