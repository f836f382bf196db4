#pragma once

// Concrete finite groups as fully validated Cayley tables.  Every constructor
// funnels through the same validation: closure, Latin-square rows/columns,
// two-sided identity (relabeled to index 0 when found elsewhere), and the full
// O(n^3) associativity scan.  Order is capped at 512.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/numth.hpp"

namespace pg {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LatinSquareError : public GroupError {
 public:
  using GroupError::GroupError;
};

class IdentityError : public GroupError {
 public:
  using GroupError::GroupError;
};

class AssociativityError : public GroupError {
 public:
  using GroupError::GroupError;
};

class CayleyParseError : public GroupError {
 public:
  using GroupError::GroupError;
};

/// A finite group given by its full multiplication table, identity at index 0.
/// Immutable after construction and safe to share across threads.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 512;

  std::size_t order() const { return n_; }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int identity() const { return 0; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_)
      throw std::invalid_argument("set_labels: one label per element required");
    labels_ = std::move(labels);
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = table_[i * n_ + j];
    return out;
  }

  friend FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table);

 private:
  FiniteGroup(std::size_t n, std::vector<std::uint16_t> table)
      : n_(n), table_(std::move(table)) {}

  std::size_t n_ = 1;
  std::vector<std::uint16_t> table_{0};
  std::vector<std::string> labels_;
};

/// Validates a square multiplication table and returns the group it defines.
/// If the two-sided identity sits at an index other than 0, elements are
/// relabeled by swapping it with index 0.
inline FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("from_cayley_table: empty table");
  if (n > FiniteGroup::kMaxOrder)
    throw std::length_error("from_cayley_table: order exceeds the 512 cap");

  std::vector<std::uint16_t> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw LatinSquareError("table is not square: row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw LatinSquareError("entry out of range at (" + std::to_string(i) +
                               "," + std::to_string(j) + ")");
      flat[i * n + j] = static_cast<std::uint16_t>(v);
    }
  }

  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[flat[i * n + j]])
        throw LatinSquareError("row " + std::to_string(i) + " is not a permutation");
      seen[flat[i * n + j]] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[flat[j * n + i]])
        throw LatinSquareError("column " + std::to_string(i) + " is not a permutation");
      seen[flat[j * n + i]] = true;
    }
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = flat[e * n + j] == j && flat[j * n + e] == j;
    if (ok) identity = e;
  }
  if (identity == n) throw IdentityError("table has no two-sided identity");

  if (identity != 0) {
    // Swap labels 0 <-> identity.
    auto relabel = [&](std::uint16_t x) -> std::uint16_t {
      if (x == identity) return 0;
      if (x == 0) return static_cast<std::uint16_t>(identity);
      return x;
    };
    std::vector<std::uint16_t> moved(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        moved[relabel(static_cast<std::uint16_t>(i)) * n +
              relabel(static_cast<std::uint16_t>(j))] =
            relabel(flat[i * n + j]);
    flat = std::move(moved);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = flat[i * n + j];
      for (std::size_t k = 0; k < n; ++k)
        if (flat[ij * n + k] != flat[i * n + flat[j * n + k]])
          throw AssociativityError("associativity fails at (" + std::to_string(i) +
                                   "," + std::to_string(j) + "," + std::to_string(k) +
                                   ")");
    }

  return FiniteGroup(n, std::move(flat));
}

namespace detail {

inline void check_order_cap(std::uint64_t order, const char* who) {
  if (order == 0) throw std::invalid_argument(std::string(who) + ": order must be positive");
  if (order > FiniteGroup::kMaxOrder)
    throw std::length_error(std::string(who) + ": order exceeds the 512 cap");
}

inline FiniteGroup group_from_rule(std::size_t n, auto&& mul) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = mul(static_cast<int>(i), static_cast<int>(j));
  return from_cayley_table(t);
}

}  // namespace detail

/// Z_n, additive.
inline FiniteGroup cyclic(std::uint64_t n) {
  detail::check_order_cap(n, "cyclic");
  const int m = static_cast<int>(n);
  return detail::group_from_rule(n, [m](int a, int b) { return (a + b) % m; });
}

/// D_n of order 2n, n >= 3: index e*n + i encodes r^i s^e.
inline FiniteGroup dihedral(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("dihedral: requires n >= 3");
  detail::check_order_cap(2 * n, "dihedral");
  const int m = static_cast<int>(n);
  return detail::group_from_rule(2 * n, [m](int a, int b) {
    const int i = a % m, e = a / m;
    const int j = b % m, d = b / m;
    const int rot = e == 0 ? (i + j) % m : ((i - j) % m + m) % m;
    return ((e + d) % 2) * m + rot;
  });
}

/// Dic_m of order 4m: index e*2m + i encodes a^i x^e with a^(2m) = 1,
/// x^2 = a^m, x^-1 a x = a^-1.
inline FiniteGroup dicyclic(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("dicyclic: requires m >= 1");
  detail::check_order_cap(4 * m, "dicyclic");
  const int two_m = static_cast<int>(2 * m);
  return detail::group_from_rule(4 * m, [two_m, m](int a, int b) {
    const int i = a % two_m, e = a / two_m;
    const int j = b % two_m, d = b / two_m;
    int rot = e == 0 ? (i + j) % two_m : ((i - j) % two_m + two_m) % two_m;
    if (e == 1 && d == 1) rot = (rot + static_cast<int>(m)) % two_m;
    return ((e + d) % 2) * two_m + rot;
  });
}

namespace detail {

inline std::vector<std::vector<int>> permutations_lex(unsigned k) {
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return perms;
}

inline bool permutation_is_even(const std::vector<int>& p) {
  unsigned inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

inline FiniteGroup permutation_group(std::vector<std::vector<int>> perms) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const std::size_t n = perms.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<int> comp(perms.front().size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(comp);
    }
  return from_cayley_table(t);
}

}  // namespace detail

/// S_k for k <= 5, elements in lexicographic one-line order (identity first).
inline FiniteGroup symmetric(unsigned k) {
  if (k < 1 || k > 5) throw std::invalid_argument("symmetric: requires 1 <= k <= 5");
  return detail::permutation_group(detail::permutations_lex(k));
}

/// A_k for k <= 5, even permutations in lexicographic order.
inline FiniteGroup alternating(unsigned k) {
  if (k < 1 || k > 5) throw std::invalid_argument("alternating: requires 1 <= k <= 5");
  std::vector<std::vector<int>> evens;
  for (auto& p : detail::permutations_lex(k))
    if (detail::permutation_is_even(p)) evens.push_back(std::move(p));
  return detail::permutation_group(std::move(evens));
}

/// Direct product on pairs, (u, v) indexed as u * |V| + v.
inline FiniteGroup direct_product(const FiniteGroup& u, const FiniteGroup& v) {
  const std::uint64_t order = static_cast<std::uint64_t>(u.order()) * v.order();
  detail::check_order_cap(order, "direct_product");
  const int kv = static_cast<int>(v.order());
  return detail::group_from_rule(order, [&, kv](int a, int b) {
    return u.op(a / kv, b / kv) * kv + v.op(a % kv, b % kv);
  });
}

/// Iterated direct product of cyclic groups; abelian({}) is trivial.
inline FiniteGroup abelian(const std::vector<std::uint64_t>& cyclic_orders) {
  FiniteGroup g = cyclic(1);
  for (std::uint64_t d : cyclic_orders) g = direct_product(g, cyclic(d));
  return g;
}

/// Z_m x| Z_k with the generator of Z_k acting as u -> r*u (multiplicatively
/// u -> u^r); element (u, v) indexed as u * k + v.
struct SemidirectSpec {
  std::uint64_t m = 0;
  std::uint64_t k = 0;
  std::uint64_t r = 1;

  void validate() const {
    if (m < 2 || k < 1)
      throw std::invalid_argument("SemidirectSpec: requires m >= 2 and k >= 1");
    if (r < 1 || r >= m)
      throw std::invalid_argument("SemidirectSpec: requires 1 <= r < m");
    if (std::gcd(r, m) != 1)
      throw std::invalid_argument("SemidirectSpec: r must be a unit mod m");
    std::uint64_t rk = 1;
    for (std::uint64_t i = 0; i < k; ++i) rk = rk * r % m;
    if (rk != 1)
      throw std::invalid_argument("SemidirectSpec: r^k != 1 (mod m), not an action");
  }
};

inline FiniteGroup semidirect_cyclic(const SemidirectSpec& spec) {
  spec.validate();
  detail::check_order_cap(spec.m * spec.k, "semidirect_cyclic");
  const int m = static_cast<int>(spec.m);
  const int k = static_cast<int>(spec.k);
  std::vector<int> r_pow(spec.k);  // r^v mod m
  r_pow[0] = 1;
  for (int v = 1; v < k; ++v)
    r_pow[v] = static_cast<int>(static_cast<std::uint64_t>(r_pow[v - 1]) * spec.r % spec.m);
  return detail::group_from_rule(spec.m * spec.k, [&, m, k](int a, int b) {
    const int u = a / k, v = a % k;
    const int u2 = b / k, v2 = b % k;
    return ((u + r_pow[v] * u2) % m) * k + (v + v2) % k;
  });
}

/// The modular p-group M_{p^a} = Z_{p^(a-1)} x| Z_p with r = 1 + p^(a-2),
/// for odd primes p and a >= 3.
inline FiniteGroup modular_group(std::uint64_t p, unsigned alpha) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("modular_group: p must be an odd prime");
  if (alpha < 3) throw std::invalid_argument("modular_group: requires alpha >= 3");
  std::uint64_t m = 1;
  for (unsigned i = 0; i + 1 < alpha; ++i) m = detail::checked_mul(m, p);
  detail::check_order_cap(detail::checked_mul(m, p), "modular_group");
  return semidirect_cyclic({m, p, 1 + m / p});
}

inline int element_order(const FiniteGroup& g, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= g.order())
    throw std::invalid_argument("element_order: index out of range");
  int acc = x;
  int order = 1;
  while (acc != 0) {
    acc = g.op(acc, x);
    ++order;
  }
  return order;
}

/// The set of powers of x, ascending by index.
inline std::vector<int> cyclic_subgroup(const FiniteGroup& g, int x) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  int acc = x;
  while (!in[acc]) {
    in[acc] = true;
    acc = g.op(acc, x);
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

inline std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> out;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x)
      central = g.op(static_cast<int>(z), static_cast<int>(x)) ==
                g.op(static_cast<int>(x), static_cast<int>(z));
    if (central) out.push_back(static_cast<int>(z));
  }
  return out;
}

inline bool is_abelian(const FiniteGroup& g) {
  return center(g).size() == g.order();
}

/// Multiset of element orders: order value -> multiplicity.
inline std::map<int, int> order_profile(const FiniteGroup& g) {
  std::map<int, int> profile;
  for (std::size_t x = 0; x < g.order(); ++x)
    ++profile[element_order(g, static_cast<int>(x))];
  return profile;
}

/// A group together with its catalog descriptor.
struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Cayley table file: first data line is n, then n lines of n 0-based indices.
/// Lines whose first non-blank character is '#' are comments.  The identity
/// may sit anywhere; it is relabeled to index 0 on load.
inline FiniteGroup parse_cayley_table(std::istream& in, const std::string& name) {
  auto fail = [&](std::size_t line, const std::string& msg) -> void {
    throw CayleyParseError(name + ":" + std::to_string(line) + ": " + msg);
  };

  std::vector<std::vector<int>> rows;
  std::size_t expected = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    if (expected == 0) {
      long long n = 0;
      if (!(tokens >> n) || n <= 0) fail(lineno, "expected the group order");
      std::string rest;
      if (tokens >> rest) fail(lineno, "unexpected token after the order");
      if (static_cast<std::uint64_t>(n) > FiniteGroup::kMaxOrder)
        fail(lineno, "order exceeds the 512 cap");
      expected = static_cast<std::size_t>(n);
      continue;
    }
    if (rows.size() == expected) fail(lineno, "extra data after the table");
    std::vector<int> row;
    long long v = 0;
    while (tokens >> v) row.push_back(static_cast<int>(v));
    if (!tokens.eof()) fail(lineno, "non-numeric table entry");
    if (row.size() != expected)
      fail(lineno, "expected " + std::to_string(expected) + " entries, got " +
                       std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (expected == 0) throw CayleyParseError(name + ": no group order found");
  if (rows.size() != expected)
    throw CayleyParseError(name + ": expected " + std::to_string(expected) +
                           " rows, got " + std::to_string(rows.size()));
  return from_cayley_table(rows);
}

inline FiniteGroup load_cayley_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CayleyParseError(path.string() + ": cannot open file");
  return parse_cayley_table(in, path.filename().string());
}

}  // namespace pg
