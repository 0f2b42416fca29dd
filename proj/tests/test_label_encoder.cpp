#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "localcert/generators.hpp"
#include "localcert/label_encoder.hpp"
#include "localcert/schemes.hpp"

using namespace localcert;

namespace {

std::size_t expected_order(const Graph& g) {
  std::size_t total = 0;
  for (VertexId v = 1; v <= g.order(); ++v) {
    const BitString& l = g.label(v);
    std::size_t ones = 0;
    for (std::size_t i = 0; i < l.size(); ++i) ones += l[i];
    // host, marker, m + 1 path vertices, 2 or 3 leaves per bit, 4 at the end
    total += 1 + 1 + (l.size() + 1) + 2 * l.size() + ones + 4;
  }
  return total;
}

Graph labeled_path(std::initializer_list<const char*> labels) {
  std::vector<BitString> ls;
  for (const char* l : labels) ls.push_back(BitString::from_binary(l));
  std::vector<Edge> edges;
  for (VertexId v = 1; v < ls.size(); ++v) edges.emplace_back(v, v + 1);
  return Graph(ls.size(), edges, ls);
}

int leaf_neighbours(const Graph& h, VertexId v) {
  int count = 0;
  for (VertexId u : h.neighbors(v)) count += h.degree(u) == 1;
  return count;
}

CertificateAssignment flip(const CertificateAssignment& certs, VertexId v, std::size_t bit) {
  CertificateAssignment out = certs;
  BitString mutated;
  for (std::size_t i = 0; i < certs[v].size(); ++i) mutated.push_back(certs[v][i] != (i == bit));
  out[v] = mutated;
  return out;
}

}  // namespace

TEST_CASE("single vertex with empty label") {
  const Graph g(1, {}, {BitString()});
  const Graph h = encode_graph(g);
  CHECK(h.order() == 7);
  CHECK(leaf_neighbours(h, 1) == 1);
  CHECK(decode_graph(h) == g);
}

TEST_CASE("edge with labels 1 and 0") {
  const Graph g = labeled_path({"1", "0"});
  const auto enc = encode_graph_detailed(g);
  CHECK(enc.gadgets[0].leaf_counts() == std::vector<int>{3, 4});
  CHECK(enc.gadgets[1].leaf_counts() == std::vector<int>{2, 4});
  CHECK(enc.graph.order() == expected_order(g));
  // Identifiers above n, consecutive per host.
  CHECK(enc.gadgets[0].marker == 3);
  CHECK(enc.gadgets[1].marker == 3 + enc.gadgets[0].vertex_count());
}

TEST_CASE("round trip and degree discipline on random labeled graphs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph base = seed % 2 ? random_tree(2 + seed % 9, seed, 4) : random_bounded_degree(2 + seed % 9, 3, seed);
    const Graph g = with_random_labels(base, 1 + seed % 4, seed);
    const auto enc = encode_graph_detailed(g);
    CHECK(enc.graph.order() == expected_order(g));
    CHECK(enc.graph.order() == [&] {
      std::size_t total = 0;
      for (VertexId v = 1; v <= g.order(); ++v) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < g.label(v).size(); ++i) ones += g.label(v)[i];
        total += gadget_host_count(g.label(v).size(), ones);
      }
      return total;
    }());
    CHECK(decode_graph(enc.graph) == g);
    for (VertexId v = 1; v <= g.order(); ++v) {
      CHECK(leaf_neighbours(enc.graph, v) == 1);
      for (std::size_t i = 0; i < enc.gadgets[v - 1].path.size(); ++i) {
        const int c = leaf_neighbours(enc.graph, enc.gadgets[v - 1].path[i]);
        CHECK(c >= 2);
        CHECK(c <= 4);
      }
    }
  }
}

TEST_CASE("size claim holds from two-bit labels on") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t bits = 2 + seed % 3;
    Graph g = with_random_labels(random_tree(3 + seed % 6, seed), bits, seed);
    g = g.with_label(1, BitString::from_binary(std::string(bits, '1')));
    CHECK(encode_graph(g).order() <= 5 * g.order() * (g.max_label_bits() + 1));
  }
  // Below two bits the gadget overhead of 7 vertices per host dominates.
  const Graph single(1, {}, {BitString()});
  CHECK(encode_graph(single).order() == 7);
  CHECK(encode_graph(single).order() > 5 * 1 * 1);
}

TEST_CASE("decode errors name the vertex") {
  const Graph g = labeled_path({"1", ""});
  const auto enc = encode_graph_detailed(g);
  const VertexId terminator = enc.gadgets[1].path.back();

  {  // five leaves on a path vertex
    std::vector<Edge> edges = enc.graph.edges();
    const VertexId extra = static_cast<VertexId>(enc.graph.order() + 1);
    edges.emplace_back(terminator, extra);
    try {
      decode_graph(Graph(extra, edges));
      FAIL("expected a decode error");
    } catch (const DecodeError& e) {
      CHECK(e.vertex() == terminator);
      CHECK(std::string(e.what()).find("5 leaf") != std::string::npos);
    }
  }
  {  // path that ends on a 2-leaf vertex: 1 - marker, 1 - p(2 leaves)
    const Graph h(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}});
    try {
      decode_graph(h);
      FAIL("expected a decode error");
    } catch (const DecodeError& e) {
      CHECK(e.vertex() == 3);
      CHECK(std::string(e.what()).find("missing terminator") != std::string::npos);
    }
  }
  // A plain path is not in the image.
  CHECK_THROWS_AS(decode_graph(path_graph(5)), DecodeError);
}

TEST_CASE("wrapped certificate codec") {
  const WrappedCert leaf{true, false, {}, {}, 0};
  CHECK(encode_wrapped(leaf) == BitString::from_binary("1"));
  const WrappedCert host{false, false, BitString::from_binary("101"), BitString::from_binary("1"), 4};
  CHECK(decode_wrapped(encode_wrapped(host)) == host);
  const WrappedCert path{false, true, BitString::from_binary("01"), {}, 0};
  CHECK(decode_wrapped(encode_wrapped(path)) == path);
  CHECK_FALSE(decode_wrapped(BitString::from_binary("11")).has_value());
  CHECK_FALSE(decode_wrapped(BitString()).has_value());
}

TEST_CASE("unlabeled wrapping of 2-colorability is complete") {
  const auto wrapped = wrap_unlabeled(scheme_k_colorability(2));
  CHECK(wrapped.radius == 1);
  std::vector<Graph> images;
  images.push_back(encode_graph(with_random_labels(path_graph(4), 1, 1, true)));
  for (std::uint64_t seed = 0; seed < 19; ++seed) {
    images.push_back(encode_graph(with_random_labels(random_tree(2 + seed % 7, seed, 3), 3, seed)));
  }
  CHECK(check_completeness(wrapped, images).ok());
}

TEST_CASE("flipping an s bit is caught on the gadget path") {
  const Graph g = with_random_labels(path_graph(4), 1, 1, true);
  const auto enc = encode_graph_detailed(g);
  const auto wrapped = wrap_unlabeled(scheme_k_colorability(2));
  const auto honest = wrapped.prover(enc.graph);
  const VertexId p1 = enc.gadgets[1].path.front();
  auto c = *decode_wrapped(honest[p1]);
  c.s = BitString::from_binary(c.s[0] ? "0" : "1");
  auto certs = honest;
  certs[p1] = encode_wrapped(c);
  const auto verdict = run_all(wrapped, enc.graph, certs);
  CHECK_FALSE(verdict.accepted);
  CHECK(std::find(verdict.rejecting_vertices.begin(), verdict.rejecting_vertices.end(), p1) !=
        verdict.rejecting_vertices.end());
}

TEST_CASE("encoded triangle is not 2-colorable under any small wrapped assignment") {
  const Graph triangle = complete_graph(3);
  const auto enc = encode_graph_detailed(triangle);
  const Graph& h = enc.graph;
  const auto wrapped = wrap_unlabeled(scheme_k_colorability(2));

  // Every vertex ranges over the leaf certificate and all host/path
  // certificates with s of length <= 1, o of length <= 1 and order 3.
  std::vector<BitString> pool{encode_wrapped(WrappedCert{true, false, {}, {}, 0})};
  for (const auto& s : enumerate_bitstrings(1)) {
    for (const auto& o : enumerate_bitstrings(1)) {
      pool.push_back(encode_wrapped(WrappedCert{false, false, s, o, 3}));
      pool.push_back(encode_wrapped(WrappedCert{false, true, s, o, 0}));
    }
  }
  AssignmentSearch search;
  search.n = h.order();
  search.candidate_counts.assign(h.order(), pool.size());
  for (VertexId v = 1; v <= h.order(); ++v) {
    std::vector<VertexId> deps = ball(h, v, wrapped.radius);
    search.depends_on.push_back(deps);
  }
  search.check = [&](VertexId v, const std::vector<std::size_t>& choice) {
    CertificateAssignment certs(h.order());
    for (VertexId u : ball(h, v, wrapped.radius)) certs[u] = pool[choice[u - 1]];
    return wrapped.verifier(induced_view(h, certs, v, wrapped.radius));
  };
  const auto result = search_accepting_assignment(search, SearchLimits{});
  CHECK(result.kind == SoundnessOutcome::Kind::kSound);
}

TEST_CASE("labeled wrapping agrees with the base scheme vertex by vertex") {
  const Scheme base = scheme_k_colorability(2);
  const Scheme round_trip = wrap_labeled(wrap_unlabeled(base));
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph shape = seed % 3 == 0 ? cycle_graph(3 + seed % 4) : random_bounded_degree(3 + seed % 5, 3, seed);
    const Graph g = with_random_labels(shape, 2, seed);
    CertificateAssignment p(g.order());
    for (VertexId v = 1; v <= g.order(); ++v) p[v] = BitString::from_binary(rng() & 1 ? "1" : "0");
    if (seed % 2 == 0) {
      if (const auto colors = find_coloring(g, 2)) {
        for (VertexId v = 1; v <= g.order(); ++v) p[v] = BitString::from_binary((*colors)[v] ? "1" : "0");
      }
    }
    const auto enc = encode_graph_detailed(g);
    const auto pu = wrap_unlabeled_certificates(decode_graph_detailed(enc.graph), p);
    const auto pl = wrap_labeled_certificates(enc, pu);
    const auto expected = run_all(base, g, p);
    const auto got = run_all(round_trip, g, pl);
    CHECK(got.accepted == expected.accepted);
    CHECK(got.rejecting_vertices == expected.rejecting_vertices);
  }
}

TEST_CASE("labeled wrapping is complete and checks gadget against label") {
  const Scheme round_trip = wrap_labeled(wrap_unlabeled(scheme_uniform_labels(1)));
  std::vector<Graph> members;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph shape = random_tree(2 + seed % 6, seed, 3);
    members.push_back(shape.with_labels(std::vector<BitString>(shape.order(), BitString::from_binary(seed % 2 ? "10" : ""))));
  }
  CHECK(check_completeness(round_trip, members).ok());

  const Graph g = members[1];
  const auto certs = round_trip.prover(g);
  const Graph relabeled = g.with_label(2, BitString::from_binary("11"));
  const auto verdict = run_all(round_trip, relabeled, certs);
  CHECK_FALSE(verdict.accepted);
  CHECK(std::find(verdict.rejecting_vertices.begin(), verdict.rejecting_vertices.end(), 2) !=
        verdict.rejecting_vertices.end());
}

TEST_CASE("empty labels give a lone terminator") {
  const Graph g = path_graph(3);
  const auto enc = encode_graph_detailed(g);
  for (const auto& gp : enc.gadgets) CHECK(gp.leaf_counts() == std::vector<int>{4});
  const Scheme round_trip = wrap_labeled(wrap_unlabeled(scheme_k_colorability(2)));
  CHECK(check_completeness(round_trip, {g}).ok());
}

TEST_CASE("single-bit mutations are rejected or harmless") {
  const Scheme base = scheme_k_colorability(2);
  const Scheme wrapped = wrap_unlabeled(base);
  const Graph g = with_random_labels(random_tree(6, 3, 3), 2, 3);
  const auto decoded = decode_graph_detailed(encode_graph(g));
  const Graph h = encode_graph(g);
  const auto honest = wrapped.prover(h);
  std::mt19937_64 rng(99);
  int rejected = 0;
  int harmless = 0;
  for (int trial = 0; trial < 100; ++trial) {
    VertexId v = 0;
    do v = static_cast<VertexId>(1 + rng() % h.order());
    while (honest[v].empty());
    const auto mutated = flip(honest, v, rng() % honest[v].size());
    if (!run_all(wrapped, h, mutated).accepted) {
      ++rejected;
      continue;
    }
    CertificateAssignment inner(g.order());
    for (VertexId u = 1; u <= g.order(); ++u) inner[u] = decode_wrapped(mutated[u])->o;
    if (wrap_unlabeled_certificates(decoded, inner) == mutated && run_all(base, g, inner).accepted) ++harmless;
  }
  CHECK(rejected >= 95);
  CHECK(rejected + harmless == 100);
}

TEST_CASE("measured sizes stay under the documented bounds") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = with_random_labels(random_tree(3 + seed % 8, seed, 3), 1 + seed % 4, seed);
    const Scheme base = scheme_k_colorability(2);
    const Scheme u = wrap_unlabeled(base);
    const Graph h = encode_graph(g);
    const auto pu = u.prover(h);
    CHECK(pu.size_bits() <= wrap_unlabeled_size_bound(base.prover(g).size_bits(), g.max_label_bits(), g.order()));
    const auto pl = wrap_labeled(u).prover(g);
    CHECK(pl.size_bits() <= wrap_labeled_size_bound(pu.size_bits(), g.max_label_bits(), h.order()));
    const std::size_t idbits = bit_width_for(h.order());
    CHECK(pl.size_bits() <= 12 * (g.max_label_bits() + 1) * (pu.size_bits() + idbits));
  }
}
