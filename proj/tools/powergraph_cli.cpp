// Command-line front end: closed-form edge counts for Z_n, catalog
// verification runs with JSON/text reports, and exact bound scans over
// integer ranges with CSV output.
//
// Exit codes: 0 = everything verified, 1 = a verification failure (a
// theorem-contradicting witness), 2 = usage or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powergraph/powergraph.hpp"

namespace {

constexpr std::uint64_t kFormulasMax = std::uint64_t{1} << 31;
constexpr std::uint64_t kBoundsMax = 1000000;

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

int run_formulas(std::uint64_t n, const std::string& json_path) {
  if (n < 1 || n > kFormulasMax)
    throw CLI::ValidationError("formulas", "n must be between 1 and 2^31");
  const pg::Factorization f = pg::factorize(n);
  const std::uint64_t order_sum = pg::divisor_order_sum(f);
  const std::uint64_t square_sum = pg::divisor_totient_square_sum(f);
  const pg::EdgeCounts counts = pg::cyclic_edge_counts(f);
  const std::uint64_t phi = pg::totient(f);
  const std::string q = f.is_one() ? "-" : std::to_string(f.least_prime());
  const std::string p = f.is_one() ? "-" : std::to_string(f.greatest_prime());

  std::cout << "n                  = " << n << "\n"
            << "order_sum          = " << order_sum << "\n"
            << "totient_square_sum = " << square_sum << "\n"
            << "totient            = " << phi << "\n"
            << "least_prime        = " << q << "\n"
            << "greatest_prime     = " << p << "\n"
            << "directed           = " << counts.directed << "\n"
            << "bidirectional      = " << counts.bidirectional << "\n"
            << "undirected         = " << counts.undirected << "\n";

  if (!json_path.empty()) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["order_sum"] = order_sum;
    j["totient_square_sum"] = square_sum;
    j["totient"] = phi;
    j["least_prime"] = q;
    j["greatest_prime"] = p;
    j["directed"] = counts.directed;
    j["bidirectional"] = counts.bidirectional;
    j["undirected"] = counts.undirected;
    write_file(json_path, j.dump(2) + "\n");
  }
  return 0;
}

int run_verify(const pg::CatalogSpec& spec, const std::string& json_path) {
  const std::vector<pg::NamedGroup> catalog = pg::resolve_catalog(spec);
  const char* source = spec.source == pg::CatalogSource::complete   ? "complete"
                       : spec.source == pg::CatalogSource::families ? "families"
                                                                    : "files";
  const pg::RunReport report = pg::run_verification(spec.order, catalog, source);
  std::cout << pg::to_text(report);
  if (!json_path.empty()) write_file(json_path, pg::to_json(report).dump(2) + "\n");
  return report.all_pass ? 0 : 1;
}

struct BoundsSummary {
  std::uint64_t checked = 0;
  std::uint64_t applicable = 0;
  std::uint64_t failures = 0;
  std::uint64_t equalities = 0;
};

int run_bounds(std::uint64_t lo, std::uint64_t hi, const std::string& check,
               const std::string& csv_path) {
  BoundsSummary s;
  std::string csv = pg::bounds_csv_header();
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const pg::Factorization f = pg::factorize(n);
    pg::BoundReport r;
    if (check == "eq7") r = pg::check_bound_odd(f);
    else if (check == "eq8") r = pg::check_bound(f);
    else r = pg::totient_lower_bound(f);
    ++s.checked;
    if (r.applicable) {
      ++s.applicable;
      if (!r.holds) ++s.failures;
      if (r.equality) ++s.equalities;
    }
    // One row per failure, per equality case, and per inapplicable value
    // (the latter with the informational exact ratio).
    if (!r.applicable || !r.holds || r.equality) csv += pg::bounds_csv_row(check, r);
  }
  std::cout << "check " << check << " over " << lo << ".." << hi << ": " << s.checked
            << " values, " << s.applicable << " applicable, " << s.failures
            << " failures, " << s.equalities << " equalities, "
            << (s.checked - s.applicable) << " inapplicable\n";
  if (!csv_path.empty()) write_file(csv_path, csv);
  return s.failures == 0 ? 0 : 1;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos)
    throw CLI::ValidationError("bounds", "range must have the form A..B");
  std::uint64_t lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoull(text.substr(0, sep), &used);
    if (used != sep) throw std::invalid_argument("trailing characters");
    hi = std::stoull(text.substr(sep + 2), &used);
    if (used != text.size() - sep - 2) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw CLI::ValidationError("bounds", "range must have the form A..B");
  }
  if (lo < 2 || lo > hi || hi > kBoundsMax)
    throw CLI::ValidationError("bounds", "range must satisfy 2 <= A <= B <= 1000000");
  return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graphs of finite groups: exact edge-count formulas, catalog "
               "verification, and bound scans"};
  app.require_subcommand(1);

  std::uint64_t formulas_n = 1;
  std::string formulas_json;
  CLI::App* formulas = app.add_subcommand("formulas", "Edge counts of Z_n in closed form");
  formulas->add_option("n", formulas_n, "group order (1..2^31)")->required();
  formulas->add_option("--json", formulas_json, "write the record to a JSON file");

  std::uint64_t verify_n = 0;
  bool use_families = false;
  bool use_complete = false;
  std::vector<std::string> verify_files;
  std::string verify_json;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check edge maximality of Z_n over a catalog of order-n groups");
  verify->add_option("n", verify_n, "group order")->required();
  CLI::Option* opt_families =
      verify->add_flag("--families", use_families, "built-in family catalog (default)");
  CLI::Option* opt_complete = verify->add_flag(
      "--complete", use_complete, "built-in complete classification (n <= 15)");
  opt_families->excludes(opt_complete);
  opt_complete->excludes(opt_families);
  verify->add_option("--file", verify_files, "Cayley table file(s) to add to the catalog");
  verify->add_option("--json", verify_json, "write the report to a JSON file");

  std::string bounds_range;
  std::string bounds_check;
  std::string bounds_csv;
  CLI::App* bounds =
      app.add_subcommand("bounds", "Scan an integer range with an exact bound check");
  bounds->add_option("range", bounds_range, "inclusive range A..B")->required();
  bounds->add_option("check", bounds_check, "one of: eq7, eq8, phi-lower")
      ->required()
      ->check(CLI::IsMember({"eq7", "eq8", "phi-lower"}));
  bounds->add_option("--csv", bounds_csv,
                     "write failure/equality/inapplicable rows to a CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (formulas->parsed()) return run_formulas(formulas_n, formulas_json);
    if (verify->parsed()) {
      pg::CatalogSpec spec;
      spec.order = verify_n;
      spec.source = use_complete ? pg::CatalogSource::complete
                    : use_families || verify_files.empty() ? pg::CatalogSource::families
                                                           : pg::CatalogSource::files;
      spec.files = verify_files;
      return run_verify(spec, verify_json);
    }
    const auto [lo, hi] = parse_range(bounds_range);
    return run_bounds(lo, hi, bounds_check, bounds_csv);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
