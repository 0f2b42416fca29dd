#ifndef LOCALCERT_PATH_CANONICAL_HPP
#define LOCALCERT_PATH_CANONICAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "localcert/certification.hpp"

namespace localcert {

// Paths with prover-chosen canonical identifiers J(v) in 1..n (the position
// along the path). Verifiers learn n from their view.

/// J indexed by vertex id (slot 0 unused), 1 at the endpoint with the smaller
/// identifier. Throws ContractViolation if g is not a path.
std::vector<VertexId> canonical_ids(const Graph& g);
bool is_path(const Graph& g);

/// ceil(log2 n): width of the J - 1 field.
int canonical_id_bits(std::size_t n);

struct LiftedCert {
  VertexId j = 0;
  BitString weak;
};

BitString encode_lifted(const LiftedCert& c, std::size_t n);
std::optional<LiftedCert> decode_lifted(const BitString& bits, std::size_t n);

/// Radius-r scheme for arbitrary identifiers from a scheme that is only
/// correct when identifiers are canonical.
Scheme lift_weak(const Scheme& weak);
/// Lifted assignment from J and weak certificates indexed by J.
CertificateAssignment lifted_certificates(const std::vector<VertexId>& j,
                                          const CertificateAssignment& weak_by_j);

/// Every J : {1..n} -> {1..n} on path(n) (identifiers in path order) that
/// passes the local canonical check at every vertex, by exhaustive search.
std::vector<std::vector<VertexId>> locally_canonical_assignments(std::size_t n);

struct ShavedCert {
  VertexId j = 0;
  /// Positions j - d .. j + d; absent entries lie outside 1..n.
  std::vector<bool> present;
  std::vector<BitString> labels;  // present entries only, ascending position
  std::vector<BitString> certs;

  friend bool operator==(const ShavedCert&, const ShavedCert&) = default;
};

BitString encode_shaved(const ShavedCert& c, std::size_t n);
std::optional<ShavedCert> decode_shaved(const BitString& bits, std::size_t n, int d);

/// Radius-1 scheme on paths from a radius-d scheme that assumes canonical
/// identifiers; each vertex carries J and the labels and base certificates
/// of positions J - d .. J + d.
Scheme shave(const Scheme& base);
CertificateAssignment shaved_certificates(const Graph& g, const std::vector<VertexId>& j,
                                          const CertificateAssignment& base_by_j, int d);

/// Labels and base certificates by position, if all windows agree.
std::optional<std::vector<std::pair<BitString, BitString>>> extract_virtual(
    const Graph& g, const CertificateAssignment& certs, int d);

/// ceil(log2 n) + (2d+1) s + framing, with framing
/// (2d+1) (1 + gamma(l) + l + gamma(s)): presence bit, sized label, length of
/// the certificate.
std::size_t shaved_size_bound(int d, std::size_t cert_bits, std::size_t label_bits, std::size_t n);

/// Identifier-sized fields in one certificate: 1 for shaved certificates,
/// origin plus neighbour list per packet for the generic reduction.
std::size_t shaved_identifier_fields();
std::size_t generic_identifier_fields(const BitString& reduced_cert, std::size_t n, int delta);

}  // namespace localcert

#endif  // LOCALCERT_PATH_CANONICAL_HPP
