#ifndef LOCALCERT_PDELTA_HPP
#define LOCALCERT_PDELTA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localcert/certification.hpp"

namespace localcert {

// The tree property P_Delta: a unique degree-2 root R joined to two complete
// (Delta-1)-ary trees of equal depth, labels giving each non-root vertex its
// sibling order a (plus a bit b on leaves), and leaf string S(G) = XX.
//
// Labels: a is written in bit_width(Delta - 1) bits; leaves append b; R's
// label is empty. Leaves are ordered depth-first with children by ascending a.

struct PDeltaInstance {
  int delta = 3;
  int depth = 1;  // distance from R to every leaf
  BitString half;  // X
  Graph graph{1, {}};
  VertexId root = 0;
  VertexId left = 0;   // child of R with a = 1
  VertexId right = 0;  // child of R with a = 2
  std::vector<VertexId> parent;  // by id; 0 for R
  std::vector<int> order;        // a by id; 0 for R
  std::vector<int> level;        // distance to R by id

  BitString leaf_string() const { return concat(half, half); }
};

int pdelta_order_bits(int delta);
std::size_t pdelta_half_leaves(int delta, int depth);
std::size_t pdelta_order(int delta, int depth);
BitString pdelta_label(int delta, int a, std::optional<bool> leaf_bit = {});

/// Member of P_Delta with S(G) = XX. Identifiers: R = 1, then depth-first
/// preorder with children by ascending a (the fixed identifier assignment).
/// A permutation seed shuffles identifiers afterwards.
PDeltaInstance p_delta_instance(int delta, int depth, const BitString& half,
                                std::optional<std::uint64_t> perm_seed = {});

/// Tree shape decoded from a graph that satisfies the first two properties.
struct PDeltaShape {
  VertexId root = 0;
  int depth = 0;
  std::vector<VertexId> parent;                 // by id
  std::vector<int> order;                       // by id
  std::vector<int> level;                       // by id
  std::vector<std::vector<VertexId>> children;  // by id, ascending a
  std::vector<BitString> subtree_string;        // S(v) by id
  BitString leaf_string() const { return subtree_string[root]; }
};

struct MembershipResult {
  bool member = false;
  /// Empty for members; otherwise starts with "Property 1", "Property 2" or
  /// "Property 3" for the first violated property.
  std::string diagnostic;
  std::optional<PDeltaShape> shape;  // present once Properties 1 and 2 hold
};

MembershipResult pdelta_membership(const Graph& g, int delta);

/// Honest certificates: S(v) when d(v, R) >= r, empty otherwise; with a cap,
/// only the first `cap` bits of S(v). Needs Properties 1 and 2 only, so it
/// also produces "honest-style" certificates for near-misses.
CertificateAssignment pdelta_certificates(const PDeltaShape& shape, int r,
                                          std::optional<std::size_t> cap = {});

/// r-local scheme for P_Delta. With `cap` the certificates are truncated to
/// at most cap bits and the verifier only checks what truncated payloads
/// still determine; that variant is deliberately unsound and exists to
/// exhibit the cut-and-glue construction.
Scheme scheme_pdelta(int delta, int r, std::optional<std::size_t> cap = {});

}  // namespace localcert

#endif  // LOCALCERT_PDELTA_HPP
