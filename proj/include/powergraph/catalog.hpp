#pragma once

// Group catalogs: the full classification for orders 1..15, and a family
// catalog (abelian types, dihedral, dicyclic, symmetric/alternating, modular
// p-groups, coprime cyclic semidirect products) for any order within the
// table cap.  Entries are deterministic: builtin groups sorted by descriptor,
// file groups appended in the order given.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "powergraph/group.hpp"
#include "powergraph/numth.hpp"

namespace pg {

enum class CatalogSource { families, complete, files };

struct CatalogSpec {
  std::uint64_t order = 0;
  CatalogSource source = CatalogSource::families;
  std::vector<std::string> files;  // Cayley table paths, used with source files
};

namespace detail {

inline std::string joined_cyclic_name(const std::vector<std::uint64_t>& orders) {
  std::string name;
  for (std::uint64_t d : orders) {
    if (!name.empty()) name += "x";
    name += "Z_" + std::to_string(d);
  }
  return name;
}

// All partitions of a, parts descending within each partition.
inline std::vector<std::vector<unsigned>> partitions(unsigned a) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto recurse = [&](auto&& self, unsigned remaining, unsigned cap) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, a, a);
  return out;
}

// Invariant factors d_1 | d_2 | ... from one exponent partition per prime.
inline std::vector<std::uint64_t> invariant_factors(
    const std::vector<std::pair<std::uint64_t, std::vector<unsigned>>>& parts) {
  std::size_t rows = 0;
  for (const auto& [p, lambda] : parts) rows = std::max(rows, lambda.size());
  std::vector<std::uint64_t> factors(rows, 1);
  for (const auto& [p, lambda] : parts)
    for (std::size_t i = 0; i < lambda.size(); ++i)
      for (unsigned e = 0; e < lambda[i]; ++e) factors[i] = checked_mul(factors[i], p);
  std::reverse(factors.begin(), factors.end());  // ascending divisibility
  return factors;
}

}  // namespace detail

/// Every abelian group of order n up to isomorphism, the cyclic one included,
/// as ascending invariant-factor lists.
inline std::vector<std::vector<std::uint64_t>> abelian_types(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::vector<std::vector<std::pair<std::uint64_t, std::vector<unsigned>>>> combos{{}};
  for (const auto& pp : f.factors()) {
    std::vector<std::vector<std::pair<std::uint64_t, std::vector<unsigned>>>> grown;
    for (const auto& combo : combos)
      for (const auto& lambda : detail::partitions(pp.exponent)) {
        auto next = combo;
        next.emplace_back(pp.prime, lambda);
        grown.push_back(std::move(next));
      }
    combos = std::move(grown);
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& combo : combos) out.push_back(detail::invariant_factors(combo));
  std::sort(out.begin(), out.end());
  return out;
}

/// The family catalog at order n: cyclic, all abelian types, dihedral,
/// dicyclic, symmetric/alternating, modular p-groups, and coprime cyclic
/// semidirect products with nontrivial action.
inline std::vector<NamedGroup> family_catalog(std::uint64_t n) {
  detail::check_order_cap(n, "family_catalog");
  std::vector<NamedGroup> catalog;
  catalog.push_back({"Z_" + std::to_string(n), cyclic(n)});

  for (const auto& type : abelian_types(n)) {
    if (type.size() <= 1) continue;  // the cyclic group is already present
    catalog.push_back({detail::joined_cyclic_name(type), abelian(type)});
  }

  if (n % 2 == 0 && n >= 6)
    catalog.push_back({"D_" + std::to_string(n / 2), dihedral(n / 2)});
  if (n % 4 == 0 && n >= 8)
    catalog.push_back({"Dic_" + std::to_string(n / 4), dicyclic(n / 4)});
  if (n == 24) catalog.push_back({"S_4", symmetric(4)});
  if (n == 120) catalog.push_back({"S_5", symmetric(5)});
  if (n == 12) catalog.push_back({"A_4", alternating(4)});
  if (n == 60) catalog.push_back({"A_5", alternating(5)});

  {
    const Factorization f = factorize(n);
    if (f.distinct_primes() == 1 && f.least_prime() > 2 && f.greatest_exponent() >= 3)
      catalog.push_back({"M_" + std::to_string(n),
                         modular_group(f.least_prime(), f.greatest_exponent())});
  }

  for (std::uint64_t m = 2; m * 2 <= n; ++m) {
    if (n % m != 0) continue;
    const std::uint64_t k = n / m;
    if (k < 2 || std::gcd(m, k) != 1) continue;
    for (std::uint64_t r = 2; r < m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      std::uint64_t rk = 1;
      for (std::uint64_t i = 0; i < k; ++i) rk = rk * r % m;
      if (rk != 1) continue;
      catalog.push_back({"Z_" + std::to_string(m) + ":Z_" + std::to_string(k) +
                             "(r=" + std::to_string(r) + ")",
                         semidirect_cyclic({m, k, r})});
    }
  }

  std::sort(catalog.begin(), catalog.end(),
            [](const NamedGroup& a, const NamedGroup& b) { return a.name < b.name; });
  return catalog;
}

/// The full classification of groups of order n, available for n <= 15.
inline std::vector<NamedGroup> complete_catalog(std::uint64_t n) {
  if (n < 1 || n > 15)
    throw std::invalid_argument(
        "complete_catalog: the built-in classification covers orders 1..15");
  std::vector<NamedGroup> catalog;
  catalog.push_back({"Z_" + std::to_string(n), cyclic(n)});
  switch (n) {
    case 4:
      catalog.push_back({"Z_2xZ_2", abelian({2, 2})});
      break;
    case 6:
      catalog.push_back({"S_3", symmetric(3)});
      break;
    case 8:
      catalog.push_back({"Z_2xZ_4", abelian({2, 4})});
      catalog.push_back({"Z_2xZ_2xZ_2", abelian({2, 2, 2})});
      catalog.push_back({"D_4", dihedral(4)});
      catalog.push_back({"Dic_2", dicyclic(2)});  // the quaternion group
      break;
    case 9:
      catalog.push_back({"Z_3xZ_3", abelian({3, 3})});
      break;
    case 10:
      catalog.push_back({"D_5", dihedral(5)});
      break;
    case 12:
      catalog.push_back({"Z_2xZ_6", abelian({2, 6})});
      catalog.push_back({"D_6", dihedral(6)});
      catalog.push_back({"A_4", alternating(4)});
      catalog.push_back({"Dic_3", dicyclic(3)});
      break;
    case 14:
      catalog.push_back({"D_7", dihedral(7)});
      break;
    default:
      break;  // prime orders and 15: only the cyclic group
  }
  std::sort(catalog.begin(), catalog.end(),
            [](const NamedGroup& a, const NamedGroup& b) { return a.name < b.name; });
  return catalog;
}

/// Resolves a catalog spec to concrete groups.  File groups must have the
/// requested order; a cyclic group is prepended for file-only catalogs so the
/// maximality checks always have their reference.
inline std::vector<NamedGroup> resolve_catalog(const CatalogSpec& spec) {
  std::vector<NamedGroup> catalog;
  switch (spec.source) {
    case CatalogSource::complete:
      catalog = complete_catalog(spec.order);
      break;
    case CatalogSource::families:
      catalog = family_catalog(spec.order);
      break;
    case CatalogSource::files:
      catalog.push_back({"Z_" + std::to_string(spec.order), cyclic(spec.order)});
      break;
  }
  std::vector<NamedGroup> from_files;
  for (const auto& path : spec.files) {
    FiniteGroup g = load_cayley_file(path);
    if (g.order() != spec.order)
      throw std::invalid_argument("catalog file '" + path + "' defines a group of order " +
                                  std::to_string(g.order()) + ", expected " +
                                  std::to_string(spec.order));
    from_files.push_back({std::filesystem::path(path).filename().string(), std::move(g)});
  }
  std::sort(from_files.begin(), from_files.end(),
            [](const NamedGroup& a, const NamedGroup& b) { return a.name < b.name; });
  for (auto& entry : from_files) catalog.push_back(std::move(entry));
  return catalog;
}

}  // namespace pg
