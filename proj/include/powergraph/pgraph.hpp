#pragma once

// Power graphs of concrete groups.  Edges are stored explicitly in bitset
// adjacency, and the order-sum formulas provide a second, independent
// counting route.

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "powergraph/group.hpp"
#include "powergraph/numth.hpp"

namespace pg {

/// Square bit matrix; row-major, 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  std::size_t size() const { return n_; }

  void set(std::size_t i, std::size_t j) {
    bits_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }

  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }

  std::uint64_t count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : bits_) total += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return total;
  }

  bool is_subset_of(const BitMatrix& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~other.bits_[i]) return false;
    return true;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// The directed power graph of a group, with derived bidirectional and
/// undirected views.  (g, h) is a directed edge iff h is a power of g and
/// h != g; {g, h} is bidirectional iff <g> = <h>.
class PowerGraph {
 public:
  explicit PowerGraph(const FiniteGroup& g)
      : n_(g.order()), dir_(g.order()), orders_(g.order(), 1) {
    // <x> gathered once per element by walking its powers.
    std::vector<int> powers;
    for (std::size_t x = 0; x < n_; ++x) {
      powers.clear();
      int acc = static_cast<int>(x);
      while (acc != 0) {
        powers.push_back(acc);
        acc = g.op(acc, static_cast<int>(x));
      }
      orders_[x] = static_cast<int>(powers.size()) + 1;  // powers excludes the identity
      if (x != 0) {
        dir_.set(x, 0);
        for (int h : powers)
          if (h != static_cast<int>(x)) dir_.set(x, static_cast<std::size_t>(h));
      }
    }
    counts_.directed = dir_.count();
    std::uint64_t bidirectional = 0;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (dir_.test(a, b) && dir_.test(b, a)) ++bidirectional;
    counts_.bidirectional = bidirectional;
    counts_.undirected = counts_.directed - counts_.bidirectional;
  }

  std::size_t order() const { return n_; }
  int element_order(int g) const { return orders_.at(static_cast<std::size_t>(g)); }

  bool has_directed(int g, int h) const { return dir_.test(check(g), check(h)); }
  bool has_bidirectional(int g, int h) const {
    return has_directed(g, h) && has_directed(h, g);
  }
  bool has_undirected(int g, int h) const {
    return has_directed(g, h) || has_directed(h, g);
  }

  const EdgeCounts& counts() const { return counts_; }

  /// Undirected degree of a vertex.
  std::size_t degree(int g) const {
    const std::size_t v = check(g);
    std::size_t d = 0;
    for (std::size_t w = 0; w < n_; ++w)
      if (w != v && (dir_.test(v, w) || dir_.test(w, v))) ++d;
    return d;
  }

  std::vector<std::pair<int, int>> directed_edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (dir_.test(a, b)) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return out;
  }

  /// Canonical (min, max) pairs, sorted.
  std::vector<std::pair<int, int>> bidirectional_edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (dir_.test(a, b) && dir_.test(b, a))
          out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return out;
  }

  /// Canonical (min, max) pairs, sorted.
  std::vector<std::pair<int, int>> undirected_edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (dir_.test(a, b) || dir_.test(b, a))
          out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return out;
  }

  const BitMatrix& directed_matrix() const { return dir_; }

  /// Symmetric closure of the bidirectional pairs.
  BitMatrix bidirectional_matrix() const {
    BitMatrix m(n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (dir_.test(a, b) && dir_.test(b, a)) {
          m.set(a, b);
          m.set(b, a);
        }
    return m;
  }

  /// Symmetric closure of the undirected pairs.
  BitMatrix undirected_matrix() const {
    BitMatrix m(n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (dir_.test(a, b) || dir_.test(b, a)) {
          m.set(a, b);
          m.set(b, a);
        }
    return m;
  }

 private:
  std::size_t check(int g) const {
    if (g < 0 || static_cast<std::size_t>(g) >= n_)
      throw std::invalid_argument("PowerGraph: vertex index out of range");
    return static_cast<std::size_t>(g);
  }

  std::size_t n_;
  BitMatrix dir_;
  std::vector<int> orders_;
  EdgeCounts counts_;
};

inline PowerGraph build_power_graph(const FiniteGroup& g) { return PowerGraph(g); }

/// Edge counts from element orders alone: directed = sum (o(g) - 1),
/// bidirectional = 1/2 sum (phi(o(g)) - 1), undirected = difference.
inline EdgeCounts edge_counts_via_orders(const FiniteGroup& g) {
  std::map<int, std::uint64_t> phi_cache;
  EdgeCounts c;
  std::uint64_t phi_sum = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const int o = element_order(g, static_cast<int>(x));
    auto it = phi_cache.find(o);
    if (it == phi_cache.end())
      it = phi_cache.emplace(o, totient(static_cast<std::uint64_t>(o))).first;
    c.directed += static_cast<std::uint64_t>(o) - 1;
    phi_sum += it->second - 1;
  }
  c.bidirectional = phi_sum / 2;  // each bidirectional pair is seen from both ends
  c.undirected = c.directed - c.bidirectional;
  return c;
}

/// One undirected edge per line, "u v" with u < v, sorted; for diffing
/// against external tools.
inline void write_edge_list(std::ostream& out, const PowerGraph& graph) {
  for (const auto& [u, v] : graph.undirected_edges())
    out << u << ' ' << v << '\n';
}

/// Checks that the power graph of a subgroup is exactly the induced subgraph
/// on its elements: adjacencies and non-adjacencies must coincide.  Throws if
/// the given subset is not closed under multiplication.
inline bool induced_subgraph_check(const FiniteGroup& g, const std::vector<int>& subgroup) {
  if (subgroup.empty())
    throw std::invalid_argument("induced_subgraph_check: empty subset");
  std::vector<int> elements = subgroup;
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::invalid_argument("induced_subgraph_check: repeated element");
  std::map<int, int> local;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 0 || static_cast<std::size_t>(elements[i]) >= g.order())
      throw std::invalid_argument("induced_subgraph_check: index out of range");
    local[elements[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const int prod = g.op(elements[i], elements[j]);
      const auto it = local.find(prod);
      if (it == local.end())
        throw std::invalid_argument("induced_subgraph_check: subset is not closed");
      table[i][j] = it->second;
    }
  const FiniteGroup h = from_cayley_table(table);

  const PowerGraph pg_g(g);
  const PowerGraph pg_h(h);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i == j) continue;
      if (pg_g.has_directed(elements[i], elements[j]) !=
          pg_h.has_directed(static_cast<int>(i), static_cast<int>(j)))
        return false;
    }
  return true;
}

struct InequalityVerdict {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
  bool equality = false;
};

/// The three counting inequalities with their structural equality classes.
struct InequalitySuite {
  InequalityVerdict order_bound;          // |G| <= |E| + 1
  InequalityVerdict directed_bound;       // |E| <= |->E|
  InequalityVerdict bidirectional_bound;  // 2|<->E| <= |->E| - |G| + 1
  bool elementary_abelian_two = false;    // every non-identity element has order 2
  bool every_nonidentity_prime_order = false;  // EPO

  /// Equality holds exactly on the predicted classes and all bounds hold.
  bool consistent() const {
    return order_bound.holds && directed_bound.holds && bidirectional_bound.holds &&
           order_bound.equality == elementary_abelian_two &&
           directed_bound.equality == elementary_abelian_two &&
           bidirectional_bound.equality == every_nonidentity_prime_order;
  }
};

inline InequalitySuite inequality_suite(const FiniteGroup& g) {
  const PowerGraph graph(g);
  const EdgeCounts c = graph.counts();
  const std::uint64_t n = g.order();

  InequalitySuite s;
  s.order_bound = {n, c.undirected + 1, n <= c.undirected + 1, n == c.undirected + 1};
  s.directed_bound = {c.undirected, c.directed, c.undirected <= c.directed,
                      c.undirected == c.directed};
  const std::uint64_t slack = c.directed - n + 1;  // directed >= n - 1 always
  s.bidirectional_bound = {2 * c.bidirectional, slack, 2 * c.bidirectional <= slack,
                           2 * c.bidirectional == slack};

  s.elementary_abelian_two = true;
  s.every_nonidentity_prime_order = true;
  for (std::size_t x = 1; x < g.order(); ++x) {
    const int o = graph.element_order(static_cast<int>(x));
    if (o != 2) s.elementary_abelian_two = false;
    if (!is_prime(static_cast<std::uint64_t>(o))) s.every_nonidentity_prime_order = false;
  }
  return s;
}

}  // namespace pg
