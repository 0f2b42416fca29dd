#ifndef LOCALCERT_LABEL_ENCODER_HPP
#define LOCALCERT_LABEL_ENCODER_HPP

#include <optional>
#include <vector>

#include "localcert/certification.hpp"

namespace localcert {

// Labels as structure. Every vertex v of G keeps its identifier, gets one
// pendant "marker" leaf, and a path p_1 ... p_{m+1} (m = |L(v)|) hanging off
// it; p_i carries 2 leaves for a 0 bit, 3 for a 1 bit, and p_{m+1} carries 4.
// Original vertices are exactly the non-leaves with one leaf neighbour.

struct GadgetPath {
  VertexId host = 0;
  VertexId marker = 0;
  std::vector<VertexId> path;                 // p_1 .. p_{m+1}
  std::vector<std::vector<VertexId>> leaves;  // per path vertex
  /// 2, 3 or 4 per path vertex.
  std::vector<int> leaf_counts() const;
  std::size_t vertex_count() const;  // marker, path and leaves
};

struct EncodedGraph {
  Graph graph{1, {}};
  std::size_t original_order = 0;
  std::vector<GadgetPath> gadgets;  // indexed by host id - 1
};

/// g(G). Gadget identifiers are n+1, n+2, ... in host order; within a host
/// the marker comes first, then each path vertex followed by its leaves.
EncodedGraph encode_graph_detailed(const Graph& g);
Graph encode_graph(const Graph& g);

/// Vertex count of g(G) for a host with an m-bit label holding `ones` ones,
/// counting the host itself.
std::size_t gadget_host_count(std::size_t m, std::size_t ones);

class DecodeError : public InputError {
 public:
  DecodeError(VertexId vertex, const std::string& what);
  VertexId vertex() const noexcept { return vertex_; }

 private:
  VertexId vertex_;
};

struct DecodedGraph {
  Graph graph{1, {}};
  std::vector<GadgetPath> gadgets;  // indexed by host id - 1, ids of H
};

/// g'(H): structural validation, then the labeled graph on the hosts. Hosts
/// must be exactly the identifiers 1..k. Throws DecodeError naming the first
/// offending vertex.
DecodedGraph decode_graph_detailed(const Graph& h);
Graph decode_graph(const Graph& h);

/// Certificate of the unlabeled wrapping: (b_l, b_p, s, o), plus the order of
/// G on hosts so the simulated labeled verifier sees the right n.
struct WrappedCert {
  bool leaf = false;     // b_l
  bool on_path = false;  // b_p
  BitString s;
  BitString o;
  std::uint64_t order = 0;  // hosts only

  friend bool operator==(const WrappedCert&, const WrappedCert&) = default;
};

/// A leaf is the single bit 1; anything else is 0, b_p, sized s, sized o and,
/// for b_p = 0, a varint order.
BitString encode_wrapped(const WrappedCert& c);
std::optional<WrappedCert> decode_wrapped(const BitString& bits);

/// Scheme for the unlabeled property {g(G) : G in P}; radius max(r, 1).
Scheme wrap_unlabeled(const Scheme& labeled);
/// Honest assignment on g(G) around an arbitrary labeled assignment of G.
CertificateAssignment wrap_unlabeled_certificates(const DecodedGraph& h,
                                                  const CertificateAssignment& labeled_certs);

/// Per-host certificate of the labeled wrapping, decoded.
struct LabeledWrapCert {
  BitString own;                  // f^u(g(G))(v)
  std::uint64_t encoded_order = 0;  // |V(g(G))|
  std::uint64_t base = 0;           // identifier of the marker
  std::vector<int> leaf_counts;     // per path vertex, 2..4
  std::vector<BitString> gadget_certs;  // marker, then per path vertex: itself, its leaves
  std::size_t gadget_size() const { return gadget_certs.size(); }

  friend bool operator==(const LabeledWrapCert&, const LabeledWrapCert&) = default;
};

BitString encode_labeled_wrap(const LabeledWrapCert& c);
std::optional<LabeledWrapCert> decode_labeled_wrap(const BitString& bits);

/// Gadget of a decoded certificate with identifiers base, base+1, ...
GadgetPath gadget_from(VertexId host, const LabeledWrapCert& c);

/// Scheme for the labeled property {G : g(G) in P^u}; same radius as the
/// unlabeled scheme. Gadgets are expected to use consecutive identifiers, as
/// encode_graph produces.
Scheme wrap_labeled(const Scheme& unlabeled);
/// Honest assignment on G from any assignment of g(G).
CertificateAssignment wrap_labeled_certificates(const EncodedGraph& h,
                                                const CertificateAssignment& unlabeled_certs);

std::size_t wrap_unlabeled_size_bound(std::size_t cert_bits, std::size_t label_bits,
                                      std::size_t order);
std::size_t wrap_labeled_size_bound(std::size_t cert_bits, std::size_t label_bits,
                                    std::size_t encoded_order);

}  // namespace localcert

#endif  // LOCALCERT_LABEL_ENCODER_HPP
