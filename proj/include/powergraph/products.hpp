#pragma once

// Edge-count algebra of direct and semidirect products: the D/B supersets of
// the product's directed/bidirectional edges, the closed product-count
// formulas for coprime factors, the edge-difference identity, and the
// cyclic-by-cyclic semidirect containment and order-divisibility checks.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "powergraph/group.hpp"
#include "powergraph/numth.hpp"
#include "powergraph/pgraph.hpp"

namespace pg {

/// D and B over product indices (u, v) -> u * |V| + v.  D collects the pairs
/// allowed by componentwise power relations; B is the bidirectional analogue,
/// stored as a symmetric matrix.
struct ProductSupersets {
  BitMatrix directed;       // D, ordered pairs
  BitMatrix bidirectional;  // B, symmetric closure of unordered pairs
  std::uint64_t directed_size = 0;       // |D|
  std::uint64_t bidirectional_size = 0;  // |B| as unordered pairs
};

/// Builds D and B from the factor edge sets and asserts that the actual
/// product edges are contained in them (they always are).
inline ProductSupersets superset_sets(const FiniteGroup& u, const FiniteGroup& v) {
  const std::size_t nu = u.order();
  const std::size_t nv = v.order();
  const std::uint64_t order = static_cast<std::uint64_t>(nu) * nv;
  detail::check_order_cap(order, "superset_sets");

  const PowerGraph gu(u);
  const PowerGraph gv(v);
  ProductSupersets out;
  out.directed = BitMatrix(order);
  out.bidirectional = BitMatrix(order);
  const auto at = [nv](std::size_t a, std::size_t b) { return a * nv + b; };

  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t a2 = 0; a2 < nu; ++a2) {
      const bool ua = gu.has_directed(static_cast<int>(a), static_cast<int>(a2));
      for (std::size_t b = 0; b < nv; ++b)
        for (std::size_t b2 = 0; b2 < nv; ++b2) {
          const bool vb = gv.has_directed(static_cast<int>(b), static_cast<int>(b2));
          if ((ua && vb) || (ua && b == b2) || (a == a2 && vb))
            out.directed.set(at(a, b), at(a2, b2));
        }
    }

  const auto bid_u = gu.bidirectional_edges();
  const auto bid_v = gv.bidirectional_edges();
  const auto add_b = [&](std::size_t x, std::size_t y) {
    out.bidirectional.set(x, y);
    out.bidirectional.set(y, x);
  };
  for (const auto& [a, a2] : bid_u)
    for (const auto& [b, b2] : bid_v) {
      add_b(at(a, b), at(a2, b2));
      add_b(at(a, b2), at(a2, b));
    }
  for (const auto& [a, a2] : bid_u)
    for (std::size_t b = 0; b < nv; ++b) add_b(at(a, b), at(a2, b));
  for (const auto& [b, b2] : bid_v)
    for (std::size_t a = 0; a < nu; ++a) add_b(at(a, b), at(a, b2));

  out.directed_size = out.directed.count();
  out.bidirectional_size = out.bidirectional.count() / 2;

  const PowerGraph product(direct_product(u, v));
  if (!product.directed_matrix().is_subset_of(out.directed))
    throw std::logic_error("superset_sets: directed product edges escape D");
  if (!product.bidirectional_matrix().is_subset_of(out.bidirectional))
    throw std::logic_error("superset_sets: bidirectional product edges escape B");
  return out;
}

namespace detail {

inline void require_coprime_orders(const FiniteGroup& u, const FiniteGroup& v,
                                   const char* who) {
  if (std::gcd(u.order(), v.order()) != 1)
    throw std::invalid_argument(std::string(who) + ": factor orders must be coprime");
}

}  // namespace detail

/// |->E(U x V)| = |->E(U)||->E(V)| + |->E(U)||V| + |U||->E(V)| for coprime
/// factor orders.
inline std::uint64_t product_directed_count(const FiniteGroup& u, const FiniteGroup& v) {
  detail::require_coprime_orders(u, v, "product_directed_count");
  const EdgeCounts cu = edge_counts_via_orders(u);
  const EdgeCounts cv = edge_counts_via_orders(v);
  return cu.directed * cv.directed + cu.directed * v.order() + u.order() * cv.directed;
}

/// |<->E(U x V)| = 2|<->E(U)||<->E(V)| + |<->E(U)||V| + |U||<->E(V)| for
/// coprime factor orders.
inline std::uint64_t product_bidirectional_count(const FiniteGroup& u,
                                                 const FiniteGroup& v) {
  detail::require_coprime_orders(u, v, "product_bidirectional_count");
  const EdgeCounts cu = edge_counts_via_orders(u);
  const EdgeCounts cv = edge_counts_via_orders(v);
  return 2 * cu.bidirectional * cv.bidirectional + cu.bidirectional * v.order() +
         u.order() * cv.bidirectional;
}

/// |E(U x V)| - |E(U x V')| for |V| = |V'| and gcd(|U|, |V|) = 1, via the
/// factor-count identity; may be negative.
inline std::int64_t product_edge_difference(const FiniteGroup& u, const FiniteGroup& v,
                                            const FiniteGroup& v_alt) {
  if (v.order() != v_alt.order())
    throw std::invalid_argument("product_edge_difference: |V| must equal |V'|");
  detail::require_coprime_orders(u, v, "product_edge_difference");
  const EdgeCounts cu = edge_counts_via_orders(u);
  const EdgeCounts cv = edge_counts_via_orders(v);
  const EdgeCounts cw = edge_counts_via_orders(v_alt);
  const auto i64 = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };
  return (i64(cu.directed) - 2 * i64(cu.bidirectional)) *
             (i64(cv.directed) - i64(cw.directed)) +
         (2 * i64(cu.bidirectional) + i64(u.order())) *
             (i64(cv.undirected) - i64(cw.undirected));
}

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// 1 + r + ... + r^(c-1) mod m, in O(log^2 c).
inline std::uint64_t geometric_sum_mod(std::uint64_t r, std::uint64_t c, std::uint64_t m) {
  if (c == 0) return 0;
  if (c % 2 == 1) return (1 + r % m * geometric_sum_mod(r, c - 1, m)) % m;
  const std::uint64_t half = geometric_sum_mod(r, c / 2, m);
  return (1 + pow_mod(r, c / 2, m)) % m * half % m;
}

}  // namespace detail

/// c-th power of (u, v) in Z_m x| Z_k: equals (t*u mod m, c*v mod k) where
/// t = 1 + s + ... + s^(c-1) and s = r^v is the exponent by which v acts.
/// Returns the element index u' * k + v'.
inline int star_power(const SemidirectSpec& spec, int u, int v, std::uint64_t c) {
  spec.validate();
  if (u < 0 || static_cast<std::uint64_t>(u) >= spec.m || v < 0 ||
      static_cast<std::uint64_t>(v) >= spec.k)
    throw std::invalid_argument("star_power: element out of range");
  const std::uint64_t s = detail::pow_mod(spec.r, static_cast<std::uint64_t>(v), spec.m);
  const std::uint64_t t = detail::geometric_sum_mod(s, c, spec.m);
  const std::uint64_t u_out = t * static_cast<std::uint64_t>(u) % spec.m;
  const std::uint64_t v_out = c % spec.k * static_cast<std::uint64_t>(v) % spec.k;
  return static_cast<int>(u_out * spec.k + v_out);
}

/// Checks the semidirect edge containments: the twisted product's directed and
/// bidirectional edges always land in the D/B supersets of the factor pair,
/// and for coprime m, k its edges are contained in those of Z_m x Z_k under
/// the shared (u, v) labeling.
inline bool semidirect_containment_check(const SemidirectSpec& spec) {
  spec.validate();
  const FiniteGroup twisted = semidirect_cyclic(spec);
  const PowerGraph pg_twisted(twisted);
  const ProductSupersets supers = superset_sets(cyclic(spec.m), cyclic(spec.k));

  bool ok = pg_twisted.directed_matrix().is_subset_of(supers.directed) &&
            pg_twisted.bidirectional_matrix().is_subset_of(supers.bidirectional);

  if (std::gcd(spec.m, spec.k) == 1) {
    const PowerGraph pg_direct(direct_product(cyclic(spec.m), cyclic(spec.k)));
    ok = ok && pg_twisted.undirected_matrix().is_subset_of(pg_direct.undirected_matrix()) &&
         pg_twisted.bidirectional_matrix().is_subset_of(pg_direct.bidirectional_matrix());
  }
  return ok;
}

/// For coprime m, k: the order of every (u, v) under the twisted product
/// divides its order under the direct product.
inline bool order_divisibility_check(const SemidirectSpec& spec) {
  spec.validate();
  if (std::gcd(spec.m, spec.k) != 1)
    throw std::invalid_argument("order_divisibility_check: m and k must be coprime");
  const FiniteGroup twisted = semidirect_cyclic(spec);
  const FiniteGroup direct = direct_product(cyclic(spec.m), cyclic(spec.k));
  for (std::size_t x = 0; x < twisted.order(); ++x) {
    const int star = element_order(twisted, static_cast<int>(x));
    const int dot = element_order(direct, static_cast<int>(x));
    if (dot % star != 0) return false;
  }
  return true;
}

}  // namespace pg
