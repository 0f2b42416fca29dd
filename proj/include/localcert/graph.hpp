#ifndef LOCALCERT_GRAPH_HPP
#define LOCALCERT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "localcert/bitstring.hpp"
#include "localcert/certificate_assignment.hpp"

namespace localcert {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Malformed input: unknown vertex, invalid graph, infeasible generator spec,
/// unparsable file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A prover was called on a graph outside the property it certifies.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Undirected, simple, connected graph on identifiers 1..n with a bit-string
/// label on every vertex. Immutable once constructed.
class Graph {
 public:
  /// Validates every invariant; throws InputError on self-loops, parallel
  /// edges, out-of-range endpoints, a label count other than n, or a
  /// disconnected graph.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<BitString> labels = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  bool contains(VertexId v) const noexcept { return v >= 1 && v <= order(); }
  /// Sorted neighbor identifiers.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;
  const BitString& label(VertexId v) const;
  const std::vector<BitString>& labels() const noexcept { return labels_; }
  /// Edges as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t max_degree() const noexcept;
  std::size_t max_label_bits() const noexcept;

  /// Same structure with label of v replaced.
  Graph with_label(VertexId v, BitString label) const;
  Graph with_labels(std::vector<BitString> labels) const;
  /// Renames vertex v to perm[v - 1]; perm must be a permutation of 1..n.
  Graph relabeled(std::span<const VertexId> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<BitString> labels_;
};

struct DegreeStats {
  std::size_t max_degree = 0;
  std::size_t n = 0;
};

DegreeStats degree_stats(const Graph& g);

/// BFS distances from `source`, indexed by vertex id (slot 0 unused).
std::vector<int> bfs_distances(const Graph& g, VertexId source);

int distance(const Graph& g, VertexId u, VertexId v);

/// Sorted identifiers of V[v, r].
std::vector<VertexId> ball(const Graph& g, VertexId v, int radius);

int diameter(const Graph& g);

/// G[v, r] together with P[v, r]: the only input a verifier ever receives.
/// Identifiers and labels are those of the host graph; `host_order()` is the
/// host's vertex count n.
///
/// degree() counts neighbors inside the view, which equals the host degree
/// for every vertex strictly closer than `radius()` to the center.
class LocalView {
 public:
  struct Vertex {
    VertexId id = 0;
    int dist = 0;
    BitString label;
    BitString cert;
    std::vector<VertexId> neighbors;

    friend bool operator==(const Vertex&, const Vertex&) = default;
  };

  /// Raw material for a view: an arbitrary finite graph with identifiers,
  /// labels and certificates. Used both for host graphs and for graphs a
  /// verifier reassembles from certificate contents.
  struct Source {
    std::vector<VertexId> ids;
    std::vector<Edge> edges;
    std::vector<BitString> labels;  // aligned with ids
    std::vector<BitString> certs;   // aligned with ids
  };

  /// Induced ball of `radius` around `center` inside `source`. Throws
  /// InputError if the source is malformed (duplicate ids, dangling or
  /// self-loop edges, center missing).
  static LocalView induced(const Source& source, VertexId center, int radius,
                           std::size_t host_order);

  VertexId center() const noexcept { return center_; }
  int radius() const noexcept { return radius_; }
  std::size_t host_order() const noexcept { return host_order_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  bool contains(VertexId v) const noexcept;
  const Vertex& at(VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const { return at(v).neighbors; }
  std::size_t degree(VertexId v) const { return at(v).neighbors.size(); }
  int dist(VertexId v) const { return at(v).dist; }
  const BitString& label(VertexId v) const { return at(v).label; }
  const BitString& cert(VertexId v) const { return at(v).cert; }
  std::size_t edge_count() const noexcept;

  /// True when the ball of `radius` around `v` lies entirely inside this view,
  /// i.e. dist(v) + radius <= radius().
  bool covers(VertexId v, int radius) const;
  /// Ball of `radius` around `v` computed inside this view.
  LocalView restricted(VertexId v, int radius) const;
  /// Same view with certificates replaced; `certs` is aligned with vertices().
  LocalView with_certs(std::span<const BitString> certs) const;

  friend bool operator==(const LocalView&, const LocalView&) = default;

 private:
  VertexId center_ = 0;
  int radius_ = 0;
  std::size_t host_order_ = 0;
  std::vector<Vertex> vertices_;  // sorted by id
};

LocalView induced_view(const Graph& g, const CertificateAssignment& certs, VertexId v,
                       int radius);

}  // namespace localcert

#endif  // LOCALCERT_GRAPH_HPP
