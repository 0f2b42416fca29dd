#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "localcert/generators.hpp"
#include "localcert/graph.hpp"
#include "localcert/pdelta.hpp"
#include "oracles.hpp"

using namespace localcert;

namespace {

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out{path_graph(5), cycle_graph(6), star_graph(6), complete_graph(4)};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    out.push_back(random_bounded_degree(6 + seed % 7, 3 + seed % 2, seed));
    out.push_back(random_tree(5 + seed, seed));
  }
  out.push_back(p_delta_instance(3, 3, BitString::from_binary("0110")).graph);
  return out;
}

}  // namespace

TEST_CASE("construction rejects malformed graphs") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}, {1, 2}, {2, 3}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}, {2, 3}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 2}}), InputError);  // disconnected
  CHECK_THROWS_AS(Graph(2, {{1, 3}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{1, 2}}, {BitString()}), InputError);
  CHECK_THROWS_AS(Graph(0, {}), InputError);
  CHECK_NOTHROW(Graph(1, {}));
}

TEST_CASE("distances on paths") {
  const Graph p = path_graph(5);
  CHECK(distance(p, 1, 5) == 4);
  CHECK(distance(p, 3, 3) == 0);
  CHECK_THROWS_AS(distance(p, 1, 6), InputError);
  CHECK(ball(p, 3, 1) == std::vector<VertexId>{2, 3, 4});
  CHECK(ball(p, 2, 0) == std::vector<VertexId>{2});
}

TEST_CASE("distance and ball agree with Floyd-Warshall") {
  for (const Graph& g : sample_graphs()) {
    const auto d = oracle::all_distances(g);
    for (VertexId u = 1; u <= g.order(); ++u) {
      const auto bfs = bfs_distances(g, u);
      for (VertexId v = 1; v <= g.order(); ++v) {
        CHECK(bfs[v] == d[u][v]);
        CHECK(distance(g, u, v) == distance(g, v, u));
        for (VertexId w = 1; w <= g.order(); ++w) CHECK(d[u][w] <= d[u][v] + d[v][w]);
      }
      for (int r = 0; r <= 3; ++r) {
        const auto b = ball(g, u, r);
        CHECK(std::set<VertexId>(b.begin(), b.end()) == oracle::ball(g, u, r));
        const auto bigger = ball(g, u, r + 1);
        CHECK(std::includes(bigger.begin(), bigger.end(), b.begin(), b.end()));
      }
    }
  }
}

TEST_CASE("bounded-degree ball bound") {
  for (const Graph& g : sample_graphs()) {
    const std::uint64_t D = std::max<std::size_t>(g.max_degree(), 2);
    for (int r = 1; r <= 3; ++r) {
      std::uint64_t bound = 2 * r + 1;
      if (D >= 3) {
        std::uint64_t p = 1;
        for (int i = 0; i < r; ++i) p *= D - 1;
        bound = (D * p - 2) / (D - 2);
      }
      for (VertexId v = 1; v <= g.order(); ++v) CHECK(ball(g, v, r).size() <= bound);
    }
  }
}

TEST_CASE("induced views") {
  const Graph c6 = cycle_graph(6);
  const CertificateAssignment certs(std::vector<BitString>(6, BitString::from_binary("1")));
  const auto view = induced_view(c6, certs, 1, 2);
  std::vector<VertexId> ids;
  for (const auto& vx : view.vertices()) ids.push_back(vx.id);
  CHECK(ids == std::vector<VertexId>{1, 2, 3, 5, 6});
  CHECK(view.edge_count() == 4);  // 5-vertex path segment
  CHECK(view.host_order() == 6);
  CHECK(view.dist(3) == 2);

  const auto point = induced_view(c6, certs, 4, 0);
  CHECK(point.vertex_count() == 1);
  CHECK(point.edge_count() == 0);

  const auto whole = induced_view(c6, certs, 4, diameter(c6));
  CHECK(whole.vertex_count() == 6);
  CHECK(whole.edge_count() == 6);
}

TEST_CASE("views match the brute-force induced subgraph and compose") {
  for (const Graph& g : sample_graphs()) {
    CertificateAssignment certs(g.order());
    for (VertexId v = 1; v <= g.order(); ++v) certs[v] = BitString::from_binary(v % 2 ? "1" : "01");
    for (VertexId v = 1; v <= g.order(); ++v) {
      for (int r = 0; r <= 3; ++r) {
        const auto view = induced_view(g, certs, v, r);
        const auto members = oracle::ball(g, v, r);
        const auto edges = oracle::induced_edges(g, members);
        CHECK(view.vertex_count() == members.size());
        CHECK(view.edge_count() == edges.size());
        for (const auto& vx : view.vertices()) {
          CHECK(members.contains(vx.id));
          CHECK(vx.cert == certs[vx.id]);
          CHECK(vx.label == g.label(vx.id));
          for (VertexId w : vx.neighbors) CHECK(edges.contains({std::min(vx.id, w), std::max(vx.id, w)}));
        }
        for (int r2 = 0; r2 <= r; ++r2) CHECK(view.restricted(v, r2) == induced_view(g, certs, v, r2));
      }
    }
  }
}

TEST_CASE("generators") {
  const Graph p3 = path_graph(3);
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_bounded_degree(8, 3, seed);
    CHECK(g.order() == 8);
    CHECK(g.max_degree() <= 3);
    CHECK(random_bounded_degree(8, 3, seed) == g);
    const Graph t = random_tree(9, seed, 3);
    CHECK(oracle::is_tree(t));
    CHECK(t.max_degree() <= 3);
  }
  CHECK(generate("path:4") == path_graph(4));
  CHECK(generate("cycle:5") == cycle_graph(5));
  CHECK(generate("pdelta:3:1:1").order() == 3);
  CHECK_THROWS_AS(generate("cycle:2"), InputError);
  CHECK_THROWS_AS(generate("pdelta:2:1:1"), InputError);
  CHECK_THROWS_AS(generate("pdelta:3:2:"), InputError);
  CHECK_THROWS_AS(generate("bogus:3"), InputError);
}

TEST_CASE("relabeling is a graph isomorphism") {
  const Graph g = with_random_labels(random_bounded_degree(9, 3, 4), 3, 4);
  const auto perm = random_permutation(9, 99);
  const Graph h = g.relabeled(perm);
  for (auto [u, v] : g.edges()) CHECK(h.adjacent(perm[u - 1], perm[v - 1]));
  for (VertexId v = 1; v <= 9; ++v) CHECK(h.label(perm[v - 1]) == g.label(v));
  CHECK(h.size() == g.size());
}

TEST_CASE("p_delta root to leaf distance") {
  const auto inst = p_delta_instance(3, 2, BitString::from_binary("10"));
  for (VertexId v = 1; v <= inst.graph.order(); ++v) {
    if (inst.graph.degree(v) == 1) CHECK(distance(inst.graph, inst.root, v) == 2);
  }
  CHECK(ball(inst.graph, inst.root, 1).size() == 3);
}
