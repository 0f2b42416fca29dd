#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "localcert/lowerbound.hpp"
#include "oracles.hpp"

using namespace localcert;

namespace {

BitString bits_of(std::size_t value, std::size_t len) {
  BitString s;
  for (std::size_t i = len; i-- > 0;) s.push_back((value >> i) & 1);
  return s;
}

std::size_t subtree_edges(const PDeltaInstance& inst, VertexId first) {
  std::size_t count = 0;
  for (auto [u, v] : inst.graph.edges()) {
    const auto under = [&](VertexId x) {
      while (x != 0 && x != first) x = inst.parent[x];
      return x == first;
    };
    if (under(u) && under(v)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("capped scheme collides and the glue fools it") {
  const auto scheme = scheme_pdelta(3, 1, 1);
  const auto report = find_collision(3, 3, 1, scheme);
  CHECK(report.instances == 16);
  CHECK(report.distinct_strings == 16);
  CHECK(report.structure_patterns == 1);
  CHECK(report.fingerprint_space == 9);
  CHECK(report.distinct_fingerprints <= report.fingerprint_space);
  REQUIRE(report.collision.has_value());
  REQUIRE(report.first.has_value());
  CHECK(report.first->print == report.second->print);
  CHECK(report.first->instance.leaf_string() != report.second->instance.leaf_string());

  const auto glued = glue(*report.first, *report.second, 1);
  CHECK_FALSE(glued.membership.member);
  CHECK(glued.membership.diagnostic.rfind("Property 3", 0) == 0);
  CHECK(glued.graph.size() == subtree_edges(report.first->instance, report.first->instance.left) +
                                        subtree_edges(report.second->instance, report.second->instance.right) + 2);
  CHECK(oracle::is_tree(glued.graph));
  const auto verdict = demonstrate(scheme, glued);
  CHECK(verdict.accepted);
  CHECK(verdict.rejecting_vertices.empty());
}

TEST_CASE("collision search is independent of the worker count") {
  const auto scheme = scheme_pdelta(3, 1, 2);
  const auto serial = find_collision(3, 3, 1, scheme, 1);
  const auto parallel = find_collision(3, 3, 1, scheme, 3);
  CHECK(serial.collision == parallel.collision);
  CHECK(serial.distinct_fingerprints == parallel.distinct_fingerprints);
  CHECK(serial.fingerprint_space == parallel.fingerprint_space);
}

TEST_CASE("honest scheme separates every half string") {
  for (int depth = 2; depth <= 3; ++depth) {
    for (int r = 1; r <= depth - 1; ++r) {
      const auto report = find_collision(3, depth, r, scheme_pdelta(3, r));
      CHECK_FALSE(report.collision.has_value());
      CHECK(report.distinct_fingerprints == report.instances);
    }
  }
}

TEST_CASE("hand-glued mismatched pair is rejected by the honest scheme") {
  const auto scheme = scheme_pdelta(3, 1);
  const auto a = lab_instance(3, 3, 1, scheme, BitString::from_binary("0110"));
  const auto b = lab_instance(3, 3, 1, scheme, BitString::from_binary("1100"));
  CHECK(a.print != b.print);
  const auto glued = glue(a, b, 1);
  CHECK_FALSE(glued.membership.member);
  const auto verdict = demonstrate(scheme, glued);
  CHECK_FALSE(verdict.accepted);
  CHECK_FALSE(verdict.rejecting_vertices.empty());
}

TEST_CASE("glue preconditions") {
  const auto scheme = scheme_pdelta(3, 1);
  const auto a = lab_instance(3, 3, 1, scheme, BitString::from_binary("0110"));
  CHECK_THROWS_AS(glue(a, a, 1), InputError);
  const auto other_depth = lab_instance(3, 2, 1, scheme, BitString::from_binary("01"));
  CHECK_THROWS_AS(glue(a, other_depth, 1), InputError);
}

TEST_CASE("fingerprint equality behaves as an equivalence") {
  const auto scheme = scheme_pdelta(3, 1, 1);
  std::vector<Fingerprint> prints;
  for (std::size_t x = 0; x < 16; ++x) prints.push_back(lab_instance(3, 3, 1, scheme, bits_of(x, 4)).print);
  for (std::size_t i = 0; i < prints.size(); ++i) {
    CHECK(prints[i] == prints[i]);
    for (std::size_t j = 0; j < prints.size(); ++j) {
      CHECK((prints[i] == prints[j]) == (prints[j] == prints[i]));
      for (std::size_t k = 0; k < prints.size(); ++k) {
        if (prints[i] == prints[j] && prints[j] == prints[k]) CHECK(prints[i] == prints[k]);
      }
    }
  }
}

TEST_CASE("fingerprint only depends on T") {
  const auto scheme = scheme_pdelta(3, 2);
  const auto a = lab_instance(3, 4, 1, scheme, BitString::from_binary("01100000"));
  const auto b = lab_instance(3, 4, 1, scheme, BitString::from_binary("01100000"));
  CHECK(a.print == b.print);
  // Certificates outside ball(R, 1) are not part of the fingerprint.
  CertificateAssignment tweaked = a.certs;
  for (VertexId v = 1; v <= a.instance.graph.order(); ++v)
    if (a.instance.level[v] >= 2) tweaked[v].push_back(true);
  CHECK(fingerprint(a.instance.graph, tweaked, a.instance.root, 1) == a.print);
  CHECK(fingerprint(a.instance.graph, tweaked, a.instance.root, 2) != fingerprint(a.instance.graph, a.certs, a.instance.root, 2));
}
