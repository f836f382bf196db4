#pragma once

// Report assembly and serialization.  A verification run combines the
// edge-maximality checks with the per-group inequality suite and the closing
// divisor-sum corollary; reports serialize to JSON (machine) and to aligned
// columns (human) deterministically, so byte-identical inputs give
// byte-identical files.

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "powergraph/catalog.hpp"
#include "powergraph/pgraph.hpp"
#include "powergraph/verify.hpp"

namespace pg {

struct GroupVerification {
  std::string name;
  EdgeCounts counts;
  bool cyclic = false;
  bool undirected_ok = false;
  bool directed_ok = false;
  InequalitySuite inequalities;
  BoundReport corollary;
  bool corollary_ok = false;  // bound holds and equality occurs iff cyclic

  bool all_ok() const {
    return undirected_ok && directed_ok && inequalities.consistent() && corollary_ok;
  }
};

struct RunReport {
  std::uint64_t order = 0;
  std::string source;
  std::vector<GroupVerification> groups;
  std::uint64_t max_undirected = 0;
  std::string argmax;
  bool all_pass = false;
};

/// Runs the maximality checks, the inequality suite and the closing corollary
/// over a catalog of order-n groups.
inline RunReport run_verification(std::uint64_t n, const std::vector<NamedGroup>& catalog,
                                  std::string source) {
  const VerificationReport theorem = verify_main_theorem(n, catalog);
  RunReport report;
  report.order = n;
  report.source = std::move(source);
  report.max_undirected = theorem.max_undirected;
  report.argmax = theorem.argmax;
  report.all_pass = true;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    GroupVerification gv;
    gv.name = theorem.entries[i].name;
    gv.counts = theorem.entries[i].counts;
    gv.cyclic = theorem.entries[i].cyclic;
    gv.undirected_ok = theorem.entries[i].undirected_ok;
    gv.directed_ok = theorem.entries[i].directed_ok;
    gv.inequalities = inequality_suite(catalog[i].group);
    gv.corollary = final_corollary_check(catalog[i].group);
    gv.corollary_ok = gv.corollary.holds && gv.corollary.equality == gv.cyclic;
    report.all_pass = report.all_pass && gv.all_ok();
    report.groups.push_back(std::move(gv));
  }
  return report;
}

inline std::string rational_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

inline nlohmann::ordered_json to_json(const InequalityVerdict& v) {
  return {{"lhs", v.lhs}, {"rhs", v.rhs}, {"holds", v.holds}, {"equality", v.equality}};
}

inline nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["order"] = report.order;
  j["source"] = report.source;
  j["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : report.groups) {
    nlohmann::ordered_json e;
    e["name"] = g.name;
    e["cyclic"] = g.cyclic;
    e["directed"] = g.counts.directed;
    e["bidirectional"] = g.counts.bidirectional;
    e["undirected"] = g.counts.undirected;
    e["undirected_max_ok"] = g.undirected_ok;
    e["directed_max_ok"] = g.directed_ok;
    e["inequalities"] = {
        {"order_bound", to_json(g.inequalities.order_bound)},
        {"directed_bound", to_json(g.inequalities.directed_bound)},
        {"bidirectional_bound", to_json(g.inequalities.bidirectional_bound)},
        {"elementary_abelian_2", g.inequalities.elementary_abelian_two},
        {"every_nonidentity_prime_order", g.inequalities.every_nonidentity_prime_order},
        {"consistent", g.inequalities.consistent()},
    };
    e["corollary"] = {
        {"lhs", rational_string(g.corollary.lhs)},
        {"rhs", rational_string(g.corollary.rhs)},
        {"holds", g.corollary.holds},
        {"equality", g.corollary.equality},
        {"ok", g.corollary_ok},
    };
    j["groups"].push_back(std::move(e));
  }
  j["summary"] = {
      {"max_undirected", report.max_undirected},
      {"argmax", report.argmax},
      {"all_pass", report.all_pass},
  };
  return j;
}

inline std::string to_text(const RunReport& report) {
  std::ostringstream out;
  out << "order " << report.order << " (" << report.source << " catalog, "
      << report.groups.size() << (report.groups.size() == 1 ? " group" : " groups")
      << ")\n";
  std::size_t name_width = 5;
  for (const auto& g : report.groups) name_width = std::max(name_width, g.name.size());
  out << std::left << std::setw(static_cast<int>(name_width) + 2) << "group"
      << std::right << std::setw(10) << "directed" << std::setw(12) << "undirected"
      << std::setw(7) << "bidi" << std::setw(8) << "cyclic" << std::setw(8) << "max"
      << std::setw(8) << "ineq" << std::setw(10) << "corollary" << "\n";
  for (const auto& g : report.groups) {
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << g.name
        << std::right << std::setw(10) << g.counts.directed << std::setw(12)
        << g.counts.undirected << std::setw(7) << g.counts.bidirectional << std::setw(8)
        << (g.cyclic ? "yes" : "no") << std::setw(8)
        << (g.undirected_ok && g.directed_ok ? "ok" : "FAIL") << std::setw(8)
        << (g.inequalities.consistent() ? "ok" : "FAIL") << std::setw(10)
        << (g.corollary_ok ? "ok" : "FAIL") << "\n";
  }
  out << "summary: max undirected = " << report.max_undirected << " (" << report.argmax
      << "); " << (report.all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

/// Fixed CSV layout shared by the bounds scans.
inline std::string bounds_csv_header() {
  return "n,check,applicable,holds,equality,lhs,rhs\n";
}

inline std::string bounds_csv_row(const std::string& check, const BoundReport& r) {
  std::ostringstream out;
  out << r.n << ',' << check << ',' << (r.applicable ? "true" : "false") << ','
      << (r.holds ? "true" : "false") << ',' << (r.equality ? "true" : "false") << ','
      << rational_string(r.lhs) << ',' << rational_string(r.rhs) << '\n';
  return out.str();
}

}  // namespace pg
