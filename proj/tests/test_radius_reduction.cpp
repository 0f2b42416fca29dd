#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "localcert/generators.hpp"
#include "localcert/pdelta.hpp"
#include "localcert/radius_reduction.hpp"
#include "localcert/schemes.hpp"
#include "oracles.hpp"

using namespace localcert;

namespace {

PacketSet packets_at(const CertificateAssignment& certs, const Graph& g, VertexId v, int delta) {
  return decode_packets(certs[v], g.order(), delta);
}

}  // namespace

TEST_CASE("reduce validates delta") {
  const auto base = scheme_tree_distances(2);
  CHECK_THROWS_AS(reduce(base, 2), InputError);
  CHECK_THROWS_AS(reduce(base, 0), InputError);
  CHECK(reduce(base, 1).radius == 1);
}

TEST_CASE("prover holds one packet per ball member") {
  const auto base = scheme_tree_distances(2);
  const Graph p5 = path_graph(5);
  const auto certs = reduced_prover(base, 1, p5);
  const auto middle = packets_at(certs, p5, 3, 1);
  REQUIRE(middle.size() == 3);
  std::multiset<int> ds;
  for (const auto& p : middle) ds.insert(p.d);
  CHECK(ds == std::multiset<int>{0, 1, 1});

  const Graph star = star_graph(5);
  CHECK(packets_at(reduced_prover(base, 1, star), star, 1, 1).size() == 5);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_tree(4 + seed % 12, seed, 3);
    for (int delta = 1; delta <= 2; ++delta) {
      const auto reduced = reduced_prover(scheme_tree_distances(3), delta, g);
      for (VertexId v = 1; v <= g.order(); ++v) {
        CHECK(packets_at(reduced, g, v, delta).size() == oracle::ball(g, v, delta).size());
      }
    }
  }
}

TEST_CASE("reduced tree distances are complete") {
  const auto reduced = reduce(scheme_tree_distances(2), 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph t = random_tree(3 + seed, seed, 3);
    CHECK(check_completeness(reduced, {t}).ok());
    CHECK_FALSE(reconstruction_mismatch(scheme_tree_distances(2), 1, t).has_value());
  }
  const auto deeper = reduce(scheme_tree_distances(3), 2);
  CHECK(check_completeness(deeper, {random_tree(12, 4, 3), path_graph(7)}).ok());
}

TEST_CASE("reduced P_Delta is complete and rebuilds the exact base view") {
  std::mt19937_64 rng(9);
  const auto base = scheme_pdelta(3, 2);
  for (int depth = 1; depth <= 3; ++depth) {
    BitString x;
    for (std::size_t i = 0; i < pdelta_half_leaves(3, depth); ++i) x.push_back(rng() & 1);
    const Graph g = p_delta_instance(3, depth, x, rng()).graph;
    CHECK(check_completeness(reduce(base, 1), {g}).ok());
    CHECK_FALSE(reconstruction_mismatch(base, 1, g).has_value());
  }
}

TEST_CASE("tampering is caught by the matching condition") {
  const auto base = scheme_tree_distances(2);
  const Graph g = path_graph(6);
  const auto honest = reduced_prover(base, 1, g);

  {  // d + 1 on a non-self packet
    auto ps = packets_at(honest, g, 3, 1);
    for (auto& p : ps)
      if (p.origin == 4) p.d = 0;
    auto certs = honest;
    certs[3] = encode_packets(canonical(ps), 6, 1);
    const auto verdict = reduced_verifier(induced_view(g, certs, 3, 1), 1, base);
    CHECK(verdict.failed == "B3");
  }
  {  // drop the self packet
    auto ps = packets_at(honest, g, 3, 1);
    std::erase_if(ps, [](const Packet& p) { return p.origin == 3; });
    auto certs = honest;
    certs[3] = encode_packets(ps, 6, 1);
    CHECK(reduced_verifier(induced_view(g, certs, 3, 1), 1, base).failed == "B2");
  }
  {  // duplicate origin
    auto ps = packets_at(honest, g, 3, 1);
    Packet extra = ps.front();
    extra.cert.push_back(true);
    ps.push_back(extra);
    auto certs = honest;
    certs[3] = encode_packets(canonical(ps), 6, 1);
    CHECK(reduced_verifier(induced_view(g, certs, 3, 1), 1, base).failed == "B1");
  }
  {  // certificate changed in one copy
    auto ps = packets_at(honest, g, 3, 1);
    for (auto& p : ps)
      if (p.origin == 2) p.cert.push_back(true);
    auto certs = honest;
    certs[3] = encode_packets(canonical(ps), 6, 1);
    const auto verdict = run_all(reduce(base, 1), g, certs);
    CHECK_FALSE(verdict.accepted);
    CHECK(reduced_verifier(induced_view(g, certs, 3, 1), 1, base).failed == "B5");
  }
  {  // missing propagated packet
    auto ps = packets_at(honest, g, 3, 1);
    std::erase_if(ps, [](const Packet& p) { return p.origin == 2; });
    auto certs = honest;
    certs[3] = encode_packets(ps, 6, 1);
    CHECK(reduced_verifier(induced_view(g, certs, 3, 1), 1, base).failed == "B4");
  }
  {  // garbage certificate decodes to nothing
    auto certs = honest;
    certs[2] = BitString::from_binary("0000");
    CHECK(reduced_verifier(induced_view(g, certs, 2, 1), 1, base).failed == "B2");
  }
}

TEST_CASE("lemma checks hold on honest runs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph t = random_tree(5 + seed, seed, 3);
    const auto certs = reduced_prover(scheme_tree_distances(2), 1, t);
    REQUIRE(run_all(reduce(scheme_tree_distances(2), 1), t, certs).accepted);
    const auto report = check_lemmas(t, certs, 1, 2);
    CHECK(report.all());
    CHECK(report.violations.empty());
  }
}

TEST_CASE("lemma checks flag forged packets") {
  const Graph g = path_graph(5);
  auto certs = reduced_prover(scheme_tree_distances(2), 1, g);
  auto ps = decode_packets(certs[3], 5, 1);
  for (auto& p : ps)
    if (p.origin == 2) p.neighbors = {1};
  certs[3] = encode_packets(canonical(ps), 5, 1);
  const auto report = check_lemmas(g, certs, 1, 2);
  CHECK_FALSE(report.well_formed);
  CHECK_FALSE(report.agreement);
}

TEST_CASE("size bound formulas") {
  CHECK(packet_count_bound(2, 3) == 7);
  CHECK(packet_count_bound(3, 2) == 10);
  CHECK(packet_count_bound(3, 1) == 4);
  CHECK(packet_count_bound(1, 2) == 5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_tree(4 + seed, seed, 3);
    for (int delta = 1; delta <= 2; ++delta) {
      const auto base = scheme_tree_distances(delta + 1);
      const auto base_certs = base.prover(g);
      const auto certs = reduced_prover(base, delta, g);
      CHECK(certs.size_bits() <=
            size_bound(g.max_degree(), delta, g.order(), base_certs.size_bits(), g.max_label_bits()));
      for (VertexId v = 1; v <= g.order(); ++v) {
        CHECK(decode_packets(certs[v], g.order(), delta).size() <=
              packet_count_bound(g.max_degree(), delta));
      }
    }
  }
}

TEST_CASE("max-degree promise") {
  const auto reduced = reduce(scheme_tree_distances(2), 1, 2);
  CHECK_THROWS_AS(reduced.prover(star_graph(4)), ContractViolation);
  CHECK(check_completeness(reduced, {path_graph(5)}).ok());
}

TEST_CASE("payload adversary finds nothing on a triangle") {
  const auto base = scheme_tree_distances(2);
  std::vector<BitString> candidates{BitString()};
  for (const auto& c : enumerate_bitstrings(4))
    if (c.size() == 4) candidates.push_back(c);
  const auto outcome = payload_soundness_search(base, 1, complete_graph(3), candidates);
  CHECK(outcome.kind == SoundnessOutcome::Kind::kSound);
}

TEST_CASE("payload adversary finds the honest assignment on a tree") {
  const auto base = scheme_tree_distances(2);
  const Graph p3 = path_graph(3);
  std::vector<BitString> candidates;
  for (const auto& c : enumerate_bitstrings(4))
    if (c.size() == 4) candidates.push_back(c);
  const auto outcome = payload_soundness_search(base, 1, p3, candidates);
  REQUIRE(outcome.kind == SoundnessOutcome::Kind::kFooled);
  CHECK(run_all(reduce(base, 1), p3, *outcome.witness).accepted);
}
