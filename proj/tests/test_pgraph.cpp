#include <map>
#include <set>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "powergraph/catalog.hpp"
#include "powergraph/pgraph.hpp"
#include "powergraph/verify.hpp"

using namespace pg;

namespace {

const std::vector<NamedGroup>& small_catalog_union(std::uint64_t max_order) {
  static std::map<std::uint64_t, std::vector<NamedGroup>> cache;
  auto [it, inserted] = cache.try_emplace(max_order);
  if (inserted) {
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(max_order, 15); ++n)
      for (auto& entry : complete_catalog(n)) it->second.push_back(std::move(entry));
    for (std::uint64_t n = 16; n <= max_order; ++n)
      for (auto& entry : family_catalog(n)) it->second.push_back(std::move(entry));
  }
  return it->second;
}

}  // namespace

TEST_CASE("power graph of the trivial group is empty") {
  const PowerGraph g(cyclic(1));
  CHECK(g.counts() == EdgeCounts{0, 0, 0});
  CHECK(g.degree(0) == 0);
}

TEST_CASE("power graph of Z_4 is complete") {
  const PowerGraph g(cyclic(4));
  CHECK(g.counts().undirected == 6);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) REQUIRE(g.has_undirected(a, b));
}

TEST_CASE("power graph of S_3 matches the oracle") {
  const FiniteGroup s3 = symmetric(3);
  const PowerGraph g(s3);
  CHECK(g.counts() == EdgeCounts{7, 1, 6});
  CHECK(g.counts() == oracle::counts(s3));
  CHECK(edge_counts_via_orders(s3) == g.counts());
}

TEST_CASE("edge counts via orders: small examples") {
  CHECK(edge_counts_via_orders(cyclic(6)) == EdgeCounts{15, 2, 13});
  CHECK(edge_counts_via_orders(cyclic(6)) ==
        cyclic_edge_counts(factorize(6)));
  CHECK(edge_counts_via_orders(abelian({2, 2})) == EdgeCounts{3, 0, 3});
}

TEST_CASE("edge sets agree with the brute-force oracle on catalog groups") {
  for (const auto& [name, g] : small_catalog_union(60)) {
    INFO(name);
    const PowerGraph graph(g);
    const oracle::EdgeSets expect = oracle::power_graph_edges(g);
    REQUIRE(graph.counts() == oracle::counts(g));
    const auto directed_list = graph.directed_edges();
    const auto undirected_list = graph.undirected_edges();
    const auto bidirectional_list = graph.bidirectional_edges();
    REQUIRE(std::set<std::pair<int, int>>(directed_list.begin(), directed_list.end()) ==
            expect.directed);
    REQUIRE(std::set<std::pair<int, int>>(undirected_list.begin(),
                                          undirected_list.end()) == expect.undirected);
    REQUIRE(std::set<std::pair<int, int>>(bidirectional_list.begin(),
                                          bidirectional_list.end()) ==
            expect.bidirectional);
  }
}

TEST_CASE("order-sum counting matches the built graph for catalogs up to 200") {
  for (std::uint64_t n = 1; n <= 15; ++n)
    for (const auto& [name, g] : complete_catalog(n)) {
      INFO(name);
      REQUIRE(edge_counts_via_orders(g) == PowerGraph(g).counts());
    }
  for (std::uint64_t n = 16; n <= 200; ++n)
    for (const auto& [name, g] : family_catalog(n)) {
      INFO(name);
      REQUIRE(edge_counts_via_orders(g) == PowerGraph(g).counts());
    }
}

TEST_CASE("handshake: degrees sum to twice the undirected count") {
  for (const auto& [name, g] : small_catalog_union(100)) {
    INFO(name);
    const PowerGraph graph(g);
    std::uint64_t degree_sum = 0;
    for (std::size_t v = 0; v < graph.order(); ++v)
      degree_sum += graph.degree(static_cast<int>(v));
    REQUIRE(degree_sum == 2 * graph.counts().undirected);
  }
}

TEST_CASE("vertex degrees: identity, generators, and the order-4 case in Z_12") {
  const PowerGraph z12(cyclic(12));
  CHECK(z12.degree(0) == 11);
  CHECK(z12.degree(1) == 11);
  CHECK(z12.degree(3) == 7);  // an order-4 element
  CHECK(z12.degree(3) == cyclic_degree(factorize(12), 4));
  CHECK_THROWS_AS(z12.degree(12), std::invalid_argument);
}

TEST_CASE("bidirectional edges are exactly same-order power pairs") {
  for (const auto& [name, g] : small_catalog_union(60)) {
    INFO(name);
    const PowerGraph graph(g);
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = a + 1; b < g.order(); ++b) {
        const bool bidi = graph.has_bidirectional(static_cast<int>(a),
                                                  static_cast<int>(b));
        const bool same_cycle =
            graph.element_order(static_cast<int>(a)) ==
                graph.element_order(static_cast<int>(b)) &&
            graph.has_directed(static_cast<int>(a), static_cast<int>(b));
        REQUIRE(bidi == same_cycle);
      }
  }
}

TEST_CASE("complete power graphs characterize cyclic prime-power groups") {
  for (const auto& [name, g] : small_catalog_union(100)) {
    INFO(name);
    const std::uint64_t n = g.order();
    const bool complete = PowerGraph(g).counts().undirected == n * (n - 1) / 2;
    const Factorization f = factorize(n);
    const bool cyclic_prime_power = is_cyclic(g) && f.distinct_primes() <= 1;
    REQUIRE(complete == cyclic_prime_power);
  }
}

TEST_CASE("edge list export is sorted and newline-terminated") {
  std::ostringstream out;
  write_edge_list(out, PowerGraph(cyclic(3)));
  CHECK(out.str() == "0 1\n0 2\n1 2\n");
}

TEST_CASE("induced subgraphs: cyclic subgroups, S_3 in S_4, the center of M_27") {
  const FiniteGroup z12 = cyclic(12);
  CHECK(induced_subgraph_check(z12, cyclic_subgroup(z12, 3)));

  const FiniteGroup s4 = symmetric(4);
  // The copy of S_3 inside S_4: permutations fixing the last point.  With
  // lexicographic indexing these are the first six elements.
  std::vector<int> embedded;
  for (int x = 0; x < 6; ++x) embedded.push_back(x);
  CHECK(induced_subgraph_check(s4, embedded));

  const FiniteGroup m27 = modular_group(3, 3);
  CHECK(induced_subgraph_check(m27, center(m27)));

  for (const auto& [name, g] : complete_catalog(12)) {
    INFO(name);
    for (std::size_t x = 0; x < g.order(); ++x)
      REQUIRE(induced_subgraph_check(g, cyclic_subgroup(g, static_cast<int>(x))));
  }

  CHECK_THROWS_AS(induced_subgraph_check(z12, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph_check(z12, {}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph_check(z12, {0, 0}), std::invalid_argument);
}

TEST_CASE("inequality suite: equality classes on small groups") {
  const InequalitySuite klein3 = inequality_suite(abelian({2, 2, 2}));
  CHECK(klein3.order_bound.equality);
  CHECK(klein3.directed_bound.equality);
  CHECK(klein3.elementary_abelian_two);
  CHECK(klein3.consistent());

  const InequalitySuite s3 = inequality_suite(symmetric(3));
  CHECK_FALSE(s3.order_bound.equality);
  CHECK(s3.bidirectional_bound.equality);  // 2*1 == 7 - 6 + 1
  CHECK(s3.bidirectional_bound.lhs == 2);
  CHECK(s3.bidirectional_bound.rhs == 2);
  CHECK(s3.every_nonidentity_prime_order);
  CHECK(s3.consistent());

  const InequalitySuite z6 = inequality_suite(cyclic(6));
  CHECK(z6.order_bound.holds);
  CHECK_FALSE(z6.order_bound.equality);
  CHECK_FALSE(z6.directed_bound.equality);
  CHECK_FALSE(z6.bidirectional_bound.equality);
  CHECK_FALSE(z6.elementary_abelian_two);
  CHECK_FALSE(z6.every_nonidentity_prime_order);
  CHECK(z6.consistent());

  CHECK(inequality_suite(cyclic(1)).consistent());
}

TEST_CASE("inequality suite is consistent across catalogs up to 100") {
  for (const auto& [name, g] : small_catalog_union(100)) {
    INFO(name);
    REQUIRE(inequality_suite(g).consistent());
  }
}
