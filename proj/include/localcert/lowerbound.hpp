#ifndef LOCALCERT_LOWERBOUND_HPP
#define LOCALCERT_LOWERBOUND_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "localcert/certification.hpp"
#include "localcert/pdelta.hpp"

namespace localcert {

// Cut-and-glue experiments on P_Delta: instances with the fixed identifier
// assignment are fingerprinted on T = ball(R, r); two instances with equal
// fingerprints but different leaf strings are glued into a non-member that
// every r-local verifier accepts under the mixed assignment.

/// Canonical bits of the subgraph induced on ball(root, r): for every vertex
/// in id order its id, label and certificate, then every induced edge.
struct Fingerprint {
  BitString bits;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Graph& g, const CertificateAssignment& certs, VertexId root, int r);
/// Same encoding with certificates left out: the structure part of T.
Fingerprint structure_fingerprint(const Graph& g, VertexId root, int r);

struct LabInstance {
  PDeltaInstance instance;
  CertificateAssignment certs;
  Fingerprint print;
};

/// Instance with half string X under the fixed identifiers, certified by
/// `scheme` and fingerprinted on ball(R, r).
LabInstance lab_instance(int delta, int depth, int r, const Scheme& scheme, const BitString& half);

struct CollisionReport {
  std::size_t instances = 0;           // enumerated, all X of the half length
  std::size_t distinct_strings = 0;    // distinct S(G)
  std::size_t distinct_fingerprints = 0;
  std::size_t structure_patterns = 0;  // distinct identifier/label/edge patterns on T
  /// Upper bound on the number of fingerprints: structure patterns times,
  /// for every vertex of T, the number of strings no longer than the longest
  /// certificate observed there (2^(b+1) - 1).
  std::uint64_t fingerprint_space = 0;
  std::vector<std::size_t> max_cert_bits_on_t;  // per vertex of T, id order
  /// Indices into the enumeration (X read as a binary number).
  std::optional<std::pair<std::size_t, std::size_t>> collision;
  std::optional<LabInstance> first;
  std::optional<LabInstance> second;
};

/// Enumerates every X of length (Delta-1)^(depth-1) in lexicographic order and
/// returns the first pair (i < j) with equal fingerprints and different S,
/// where j is the smallest index whose fingerprint was seen before.
/// Fingerprints are computed across `jobs` threads; the answer is the same.
CollisionReport find_collision(int delta, int depth, int r, const Scheme& scheme, int jobs = 1);

struct GlueResult {
  Graph graph{1, {}};
  CertificateAssignment certs;  // f(H1) on LT and R, f(H2) on RT
  BitString left_half;   // X of H1
  BitString right_half;  // X of H2
  MembershipResult membership;
};

/// Left subtree and root from H1, right subtree from H2. Throws InputError
/// unless both are P_Delta instances of the same shape with identical
/// identifiers and labels on T, and S(H1) != S(H2).
GlueResult glue(const LabInstance& h1, const LabInstance& h2, int r);

/// run_all of `scheme` on the glued graph with the mixed assignment.
Verdict demonstrate(const Scheme& scheme, const GlueResult& glued, int jobs = 1);

}  // namespace localcert

#endif  // LOCALCERT_LOWERBOUND_HPP
