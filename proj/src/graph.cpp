#include "localcert/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace localcert {

namespace {

std::string vertex_name(VertexId v) { return std::to_string(v); }

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<BitString> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (n == 0) throw InputError("graph must have at least one vertex");
  if (labels_.empty()) labels_.resize(n);
  if (labels_.size() != n) throw InputError("label count must equal vertex count");

  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError("edge {" + vertex_name(u) + "," + vertex_name(v) +
                       "} references an unknown vertex");
    }
    if (u == v) throw InputError("self-loop at vertex " + vertex_name(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InputError("parallel edge {" + vertex_name(dup->first) + "," +
                     vertex_name(dup->second) + "}");
  }
  for (auto [u, v] : edges_) {
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  const auto dist = bfs_distances(*this, 1);
  for (VertexId v = 1; v <= n; ++v) {
    if (dist[v] < 0) throw InputError("graph is disconnected (vertex " + vertex_name(v) + ")");
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (!contains(v)) throw InputError("unknown vertex " + vertex_name(v));
  return adjacency_[v - 1];
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

const BitString& Graph::label(VertexId v) const {
  if (!contains(v)) throw InputError("unknown vertex " + vertex_name(v));
  return labels_[v - 1];
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& nb : adjacency_) d = std::max(d, nb.size());
  return d;
}

std::size_t Graph::max_label_bits() const noexcept {
  std::size_t l = 0;
  for (const auto& lab : labels_) l = std::max(l, lab.size());
  return l;
}

Graph Graph::with_label(VertexId v, BitString label) const {
  if (!contains(v)) throw InputError("unknown vertex " + vertex_name(v));
  auto labels = labels_;
  labels[v - 1] = std::move(label);
  return with_labels(std::move(labels));
}

Graph Graph::with_labels(std::vector<BitString> labels) const {
  return Graph(order(), edges_, std::move(labels));
}

Graph Graph::relabeled(std::span<const VertexId> perm) const {
  const std::size_t n = order();
  if (perm.size() != n) throw InputError("permutation size mismatch");
  std::vector<bool> seen(n + 1, false);
  for (VertexId p : perm) {
    if (p < 1 || p > n || seen[p]) throw InputError("not a permutation of 1..n");
    seen[p] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (auto [u, v] : edges_) edges.emplace_back(perm[u - 1], perm[v - 1]);
  std::vector<BitString> labels(n);
  for (VertexId v = 1; v <= n; ++v) labels[perm[v - 1] - 1] = labels_[v - 1];
  return Graph(n, std::move(edges), std::move(labels));
}

DegreeStats degree_stats(const Graph& g) { return {g.max_degree(), g.order()}; }

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  if (!g.contains(source)) throw InputError("unknown vertex " + vertex_name(source));
  std::vector<int> dist(g.order() + 1, -1);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int distance(const Graph& g, VertexId u, VertexId v) {
  if (!g.contains(v)) throw InputError("unknown vertex " + vertex_name(v));
  return bfs_distances(g, u)[v];
}

std::vector<VertexId> ball(const Graph& g, VertexId v, int radius) {
  if (radius < 0) throw InputError("negative radius");
  const auto dist = bfs_distances(g, v);
  std::vector<VertexId> out;
  for (VertexId u = 1; u <= g.order(); ++u) {
    if (dist[u] <= radius) out.push_back(u);
  }
  return out;
}

int diameter(const Graph& g) {
  int d = 0;
  for (VertexId v = 1; v <= g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    d = std::max(d, *std::max_element(dist.begin() + 1, dist.end()));
  }
  return d;
}

LocalView LocalView::induced(const Source& source, VertexId center, int radius,
                             std::size_t host_order) {
  if (radius < 0) throw InputError("negative radius");
  const std::size_t k = source.ids.size();
  if (source.labels.size() != k || source.certs.size() != k) {
    throw InputError("view source fields are not aligned");
  }
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) {
    if (!index.emplace(source.ids[i], i).second) {
      throw InputError("duplicate vertex " + vertex_name(source.ids[i]) + " in view source");
    }
  }
  std::vector<std::vector<std::size_t>> adj(k);
  for (auto [u, v] : source.edges) {
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu == index.end() || iv == index.end()) throw InputError("dangling edge in view source");
    if (u == v) throw InputError("self-loop in view source");
    adj[iu->second].push_back(iv->second);
    adj[iv->second].push_back(iu->second);
  }
  auto ic = index.find(center);
  if (ic == index.end()) throw InputError("view center " + vertex_name(center) + " missing");

  std::vector<int> dist(k, -1);
  std::deque<std::size_t> queue{ic->second};
  dist[ic->second] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (dist[u] == radius) continue;
    for (std::size_t w : adj[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }

  LocalView view;
  view.center_ = center;
  view.radius_ = radius;
  view.host_order_ = host_order;
  for (const auto& [id, i] : index) {  // std::map iterates in id order
    if (dist[i] < 0) continue;
    Vertex vx;
    vx.id = id;
    vx.dist = dist[i];
    vx.label = source.labels[i];
    vx.cert = source.certs[i];
    for (std::size_t w : adj[i]) {
      if (dist[w] >= 0) vx.neighbors.push_back(source.ids[w]);
    }
    std::sort(vx.neighbors.begin(), vx.neighbors.end());
    if (std::adjacent_find(vx.neighbors.begin(), vx.neighbors.end()) != vx.neighbors.end()) {
      throw InputError("parallel edge in view source at " + vertex_name(id));
    }
    view.vertices_.push_back(std::move(vx));
  }
  return view;
}

bool LocalView::contains(VertexId v) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                             [](const Vertex& a, VertexId b) { return a.id < b; });
  return it != vertices_.end() && it->id == v;
}

const LocalView::Vertex& LocalView::at(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                             [](const Vertex& a, VertexId b) { return a.id < b; });
  if (it == vertices_.end() || it->id != v) {
    throw InputError("vertex " + vertex_name(v) + " is not in the local view");
  }
  return *it;
}

std::size_t LocalView::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& v : vertices_) twice += v.neighbors.size();
  return twice / 2;
}

bool LocalView::covers(VertexId v, int radius) const {
  return contains(v) && at(v).dist + radius <= radius_;
}

LocalView LocalView::restricted(VertexId v, int radius) const {
  Source src;
  for (const auto& vx : vertices_) {
    src.ids.push_back(vx.id);
    src.labels.push_back(vx.label);
    src.certs.push_back(vx.cert);
    for (VertexId w : vx.neighbors) {
      if (vx.id < w) src.edges.emplace_back(vx.id, w);
    }
  }
  return induced(src, v, radius, host_order_);
}

LocalView LocalView::with_certs(std::span<const BitString> certs) const {
  if (certs.size() != vertices_.size()) throw InputError("certificate count does not match view");
  LocalView out = *this;
  for (std::size_t i = 0; i < certs.size(); ++i) out.vertices_[i].cert = certs[i];
  return out;
}

LocalView induced_view(const Graph& g, const CertificateAssignment& certs, VertexId v,
                       int radius) {
  if (!g.contains(v)) throw InputError("unknown vertex " + vertex_name(v));
  if (radius < 0) throw InputError("negative radius");
  if (certs.order() != g.order()) {
    throw InputError("certificate assignment is not total on the graph");
  }
  const auto members = ball(g, v, radius);
  LocalView::Source src;
  src.ids = members;
  for (VertexId u : members) {
    src.labels.push_back(g.label(u));
    src.certs.push_back(certs[u]);
    for (VertexId w : g.neighbors(u)) {
      if (u < w && std::binary_search(members.begin(), members.end(), w)) {
        src.edges.emplace_back(u, w);
      }
    }
  }
  return LocalView::induced(src, v, radius, g.order());
}

}  // namespace localcert
