#include "localcert/schemes.hpp"

#include <algorithm>
#include <functional>

namespace localcert {

namespace {

std::optional<std::uint64_t> read_exact(const BitString& cert, int width) {
  if (cert.size() != static_cast<std::size_t>(width)) return std::nullopt;
  BitReader in(cert);
  return in.read_fixed(width);
}

struct TreeCert {
  std::uint64_t root = 0;  // 1-based
  std::uint64_t dist = 0;
};

std::optional<TreeCert> decode_tree_cert(const BitString& cert, std::size_t n) {
  const int w = tree_distance_width(n);
  if (cert.size() != static_cast<std::size_t>(2 * w)) return std::nullopt;
  BitReader in(cert);
  const auto root = in.read_fixed(w);
  const auto dist = in.read_fixed(w);
  if (!root || !dist || *root >= n) return std::nullopt;
  return TreeCert{*root + 1, *dist};
}

bool tree_rule_at(const LocalView& view, VertexId v) {
  const std::size_t n = view.host_order();
  const auto own = decode_tree_cert(view.cert(v), n);
  if (!own) return false;
  std::size_t closer = 0;
  for (VertexId u : view.neighbors(v)) {
    const auto other = decode_tree_cert(view.cert(u), n);
    if (!other || other->root != own->root) return false;
    if (other->dist + 1 == own->dist) {
      ++closer;
    } else if (other->dist != own->dist + 1) {
      return false;
    }
  }
  if (own->dist == 0) return v == own->root && closer == 0;
  return closer == 1;
}

}  // namespace

std::optional<std::vector<int>> find_coloring(const Graph& g, int k) {
  const std::size_t n = g.order();
  std::vector<int> color(n + 1, -1);
  std::function<bool(VertexId)> place = [&](VertexId v) {
    if (v > n) return true;
    for (int c = 0; c < k; ++c) {
      bool clash = false;
      for (VertexId u : g.neighbors(v)) clash = clash || color[u] == c;
      if (clash) continue;
      color[v] = c;
      if (place(v + 1)) return true;
    }
    color[v] = -1;
    return false;
  };
  if (k < 1 || !place(1)) return std::nullopt;
  return color;
}

Scheme scheme_k_colorability(int k) {
  if (k < 1) throw InputError("k-colorability needs k >= 1");
  const int width = bit_width_for(static_cast<std::uint64_t>(k - 1));
  Scheme s;
  s.name = "kcolor:" + std::to_string(k);
  s.radius = 1;
  s.prover = [k, width](const Graph& g) {
    const auto color = find_coloring(g, k);
    if (!color) throw ContractViolation("graph is not " + std::to_string(k) + "-colorable");
    CertificateAssignment certs(g.order());
    for (VertexId v = 1; v <= g.order(); ++v) {
      BitWriter out;
      out.write_fixed(static_cast<std::uint64_t>((*color)[v]), width);
      certs[v] = std::move(out).take();
    }
    return certs;
  };
  s.verifier = [k, width](const LocalView& view) {
    for (const auto& vx : view.vertices()) {
      const auto c = read_exact(vx.cert, width);
      if (!c || *c >= static_cast<std::uint64_t>(k)) return false;
    }
    const auto own = read_exact(view.cert(view.center()), width);
    for (VertexId u : view.neighbors(view.center())) {
      if (read_exact(view.cert(u), width) == own) return false;
    }
    return true;
  };
  return s;
}

int tree_distance_width(std::size_t n) {
  return std::max(1, bit_width_for(n == 0 ? 0 : n - 1));
}

Scheme scheme_tree_distances(int radius) {
  if (radius < 1) throw InputError("tree-dist radius must be at least 1");
  Scheme s;
  s.name = radius == 1 ? "tree-dist" : "tree-dist:" + std::to_string(radius);
  s.radius = radius;
  s.prover = [](const Graph& g) {
    if (g.size() + 1 != g.order()) throw ContractViolation("graph is not a tree");
    const std::size_t n = g.order();
    const int w = tree_distance_width(n);
    const auto dist = bfs_distances(g, 1);
    CertificateAssignment certs(n);
    for (VertexId v = 1; v <= n; ++v) {
      BitWriter out;
      out.write_fixed(0, w);
      out.write_fixed(static_cast<std::uint64_t>(dist[v]), w);
      certs[v] = std::move(out).take();
    }
    return certs;
  };
  s.verifier = [radius](const LocalView& view) {
    if (radius == 1) return tree_rule_at(view, view.center());
    for (const auto& vx : view.vertices()) {
      if (vx.dist <= radius - 1 && !tree_rule_at(view, vx.id)) return false;
    }
    return true;
  };
  return s;
}

Scheme scheme_uniform_labels(int d) {
  if (d < 0) throw InputError("uniform-labels radius must be non-negative");
  Scheme s;
  s.name = "uniform-labels:" + std::to_string(d);
  s.radius = d;
  s.prover = [](const Graph& g) {
    for (const auto& label : g.labels()) {
      if (label != g.labels().front()) throw ContractViolation("labels are not uniform");
    }
    return CertificateAssignment(g.order());
  };
  s.verifier = [](const LocalView& view) {
    const BitString& own = view.label(view.center());
    return std::all_of(view.vertices().begin(), view.vertices().end(),
                       [&](const auto& vx) { return vx.cert.empty() && vx.label == own; });
  };
  return s;
}

Scheme scheme_even_order_weak() {
  Scheme s;
  s.name = "even-path";
  s.radius = 1;
  s.prover = [](const Graph& g) {
    if (g.order() % 2 != 0) throw ContractViolation("path has odd order");
    return CertificateAssignment(g.order());
  };
  s.verifier = [](const LocalView& view) {
    if (!view.cert(view.center()).empty()) return false;
    if (view.center() == view.host_order()) return view.host_order() % 2 == 0;
    return true;
  };
  return s;
}

Scheme scheme_accept_all(int radius) {
  return Scheme{"accept-all", radius, [](const Graph& g) { return CertificateAssignment(g.order()); },
                [](const LocalView&) { return true; }};
}

Scheme scheme_reject_all(int radius) {
  return Scheme{"reject-all", radius, [](const Graph& g) { return CertificateAssignment(g.order()); },
                [](const LocalView&) { return false; }};
}

}  // namespace localcert
