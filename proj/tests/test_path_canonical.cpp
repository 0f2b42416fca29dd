#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "localcert/generators.hpp"
#include "localcert/packet.hpp"
#include "localcert/path_canonical.hpp"
#include "localcert/radius_reduction.hpp"
#include "localcert/schemes.hpp"

using namespace localcert;

namespace {

Graph shuffled_path(std::size_t n, std::uint64_t seed) {
  const auto perm = random_permutation(n, seed);
  return path_graph(n).relabeled(perm);
}

Graph uniform(const Graph& g, const char* label) {
  return g.with_labels(std::vector<BitString>(g.order(), BitString::from_binary(label)));
}

bool contains(const std::vector<VertexId>& xs, VertexId x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

TEST_CASE("canonical identifiers follow the path from the smaller endpoint") {
  const Graph g(4, {{3, 1}, {1, 4}, {4, 2}});
  const auto j = canonical_ids(g);
  CHECK(j[2] == 1);
  CHECK(j[4] == 2);
  CHECK(j[1] == 3);
  CHECK(j[3] == 4);
  CHECK(canonical_ids(path_graph(1))[1] == 1);
  CHECK_THROWS_AS(canonical_ids(star_graph(4)), ContractViolation);
  CHECK_THROWS_AS(canonical_ids(cycle_graph(4)), ContractViolation);
  CHECK(canonical_id_bits(8) == 3);
  CHECK(canonical_id_bits(9) == 4);
  CHECK(canonical_id_bits(1) == 0);
}

TEST_CASE("lifted parity scheme") {
  const Scheme lifted = lift_weak(scheme_even_order_weak());
  CHECK(check_completeness(lifted, {shuffled_path(6, 1), shuffled_path(2, 2), shuffled_path(10, 3)}).ok());

  const Graph p5 = shuffled_path(5, 4);
  const auto j = canonical_ids(p5);
  const auto certs = lifted_certificates(j, CertificateAssignment(5));
  const auto verdict = run_all(lifted, p5, certs);
  CHECK_FALSE(verdict.accepted);
  REQUIRE(verdict.rejecting_vertices.size() == 1);
  CHECK(j[verdict.rejecting_vertices.front()] == 5);
}

TEST_CASE("skipping a canonical value is rejected") {
  const Scheme lifted = lift_weak(scheme_accept_all(1));
  const Graph g = path_graph(6);
  std::vector<VertexId> j{0, 1, 2, 3, 5, 6, 4};
  const auto verdict = run_all(lifted, g, lifted_certificates(j, CertificateAssignment(6)));
  CHECK_FALSE(verdict.accepted);
  CHECK(contains(verdict.rejecting_vertices, 4));
}

TEST_CASE("lifted verdicts do not depend on identifiers") {
  const Scheme lifted = lift_weak(scheme_even_order_weak());
  for (std::size_t n = 2; n <= 9; ++n) {
    const Graph base = path_graph(n);
    const auto j = canonical_ids(base);
    const bool expected = run_all(lifted, base, lifted_certificates(j, CertificateAssignment(n))).accepted;
    CHECK(expected == (n % 2 == 0));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = base.relabeled(random_permutation(n, seed * 31 + n));
      const auto jg = canonical_ids(g);
      CHECK(run_all(lifted, g, lifted_certificates(jg, CertificateAssignment(n))).accepted == expected);
    }
  }
}

TEST_CASE("only the two canonical orders pass the local check") {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto found = locally_canonical_assignments(n);
    std::vector<VertexId> up;
    std::vector<VertexId> down;
    for (VertexId v = 1; v <= n; ++v) {
      up.push_back(v);
      down.push_back(static_cast<VertexId>(n + 1 - v));
    }
    if (n == 1) {
      CHECK(found == std::vector<std::vector<VertexId>>{up});
    } else {
      CHECK(found == std::vector<std::vector<VertexId>>{up, down});
    }
  }
}

TEST_CASE("shaved codec") {
  const ShavedCert c{3, {true, true, true, true, false}, {BitString::from_binary("1"), {}, {}, {}},
                     {{}, BitString::from_binary("01"), {}, {}}};
  const auto bits = encode_shaved(c, 4);
  CHECK(decode_shaved(bits, 4, 2) == c);
  CHECK_FALSE(decode_shaved(bits.prefix(bits.size() - 1), 4, 2).has_value());
  CHECK_FALSE(decode_shaved(bits, 4, 1).has_value());
}

TEST_CASE("shaved uniform-label fixture") {
  const Scheme shaved = shave(scheme_uniform_labels(2));
  CHECK(shaved.radius == 1);
  for (std::size_t n : {8, 16, 64}) {
    const Graph g = uniform(shuffled_path(n, n), "01");
    const auto certs = shaved.prover(g);
    REQUIRE(run_all(shaved, g, certs).accepted);
    const auto j = canonical_ids(g);

    for (VertexId v = 1; v <= n; v += (n > 16 ? 7 : 1)) {
      for (const char* deviant : {"", "00", "011"}) {
        const Graph bad = g.with_label(v, BitString::from_binary(deviant));
        // Honest certificates of the uniform instance.
        const auto stale = run_all(shaved, bad, certs);
        CHECK_FALSE(stale.accepted);
        // Certificates that describe the deviant labels faithfully.
        const auto faithful = run_all(shaved, bad, shaved_certificates(bad, j, CertificateAssignment(n), 2));
        CHECK_FALSE(faithful.accepted);
        for (VertexId u : faithful.rejecting_vertices) {
          CHECK(std::abs(static_cast<long>(j[u]) - static_cast<long>(j[v])) <= 3);
        }
      }
    }
  }
}

TEST_CASE("shaved scheme rejects non-paths") {
  const Scheme shaved = shave(scheme_uniform_labels(2));
  const Graph star = star_graph(4);
  const auto fake = shaved_certificates(path_graph(4), canonical_ids(path_graph(4)), CertificateAssignment(4), 2);
  CHECK_FALSE(run_all(shaved, star, fake).accepted);
  CHECK_THROWS_AS(shaved.prover(star), ContractViolation);
}

TEST_CASE("accepted mutations still describe one virtual assignment") {
  const Scheme shaved = shave(scheme_uniform_labels(2));
  const Graph g = uniform(shuffled_path(10, 5), "1");
  const auto honest = shaved.prover(g);
  std::mt19937_64 rng(8);
  int accepted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto certs = honest;
    const VertexId v = static_cast<VertexId>(1 + rng() % 10);
    BitString mutated;
    const std::size_t bit = rng() % certs[v].size();
    for (std::size_t i = 0; i < certs[v].size(); ++i) mutated.push_back(certs[v][i] != (i == bit));
    certs[v] = mutated;
    if (!run_all(shaved, g, certs).accepted) continue;
    ++accepted;
    const auto virt = extract_virtual(g, certs, 2);
    REQUIRE(virt.has_value());
    const auto j = canonical_ids(g);
    for (VertexId u = 1; u <= 10; ++u) CHECK((*virt)[j[u] - 1].first == g.label(u));
  }
  CHECK(extract_virtual(g, honest, 2).has_value());
  MESSAGE("accepted mutations: " << accepted);
}

TEST_CASE("shaved size and identifier fields against the generic reduction") {
  const Scheme base = scheme_uniform_labels(2);
  const Scheme shaved = shave(base);
  const Scheme generic = reduce(base, 1);
  for (std::size_t n : {16, 64, 256}) {
    const Graph g = uniform(shuffled_path(n, n + 1), "1");
    const auto certs = shaved.prover(g);
    CHECK(certs.size_bits() <= shaved_size_bound(2, 0, g.max_label_bits(), n));
    const auto generic_certs = generic.prover(g);
    REQUIRE(run_all(generic, g, generic_certs).accepted);
    std::size_t fields = 0;
    for (VertexId v = 1; v <= n; ++v) fields = std::max(fields, generic_identifier_fields(generic_certs[v], n, 1));
    CHECK(shaved_identifier_fields() == 1);
    CHECK(fields >= 5);
    CHECK(certs.size_bits() < generic_certs.size_bits());
  }
}
