#include "localcert/lowerbound.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace localcert {

namespace {

Fingerprint encode_ball(const Graph& g, const CertificateAssignment* certs, VertexId root, int r) {
  const auto members = ball(g, root, r);
  const int w = bit_width_for(g.order());
  BitWriter out;
  out.write_varint(members.size());
  for (VertexId v : members) {
    out.write_fixed(v, w);
    out.write_sized(g.label(v));
    if (certs) out.write_sized((*certs)[v]);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (std::binary_search(members.begin(), members.end(), u) &&
        std::binary_search(members.begin(), members.end(), v)) {
      edges.emplace_back(u, v);
    }
  }
  out.write_varint(edges.size());
  for (auto [u, v] : edges) {
    out.write_fixed(u, w);
    out.write_fixed(v, w);
  }
  return Fingerprint{std::move(out).take()};
}

// Vertices whose path to the root starts with `first`.
std::vector<bool> subtree_mask(const PDeltaInstance& inst, VertexId first) {
  const std::size_t n = inst.graph.order();
  std::vector<bool> mask(n + 1, false);
  for (VertexId v = 1; v <= n; ++v) {
    VertexId u = v;
    while (u != 0 && u != first) u = inst.parent[u];
    mask[v] = u == first;
  }
  return mask;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

Fingerprint fingerprint(const Graph& g, const CertificateAssignment& certs, VertexId root, int r) {
  return encode_ball(g, &certs, root, r);
}

Fingerprint structure_fingerprint(const Graph& g, VertexId root, int r) {
  return encode_ball(g, nullptr, root, r);
}

LabInstance lab_instance(int delta, int depth, int r, const Scheme& scheme, const BitString& half) {
  LabInstance out{p_delta_instance(delta, depth, half), {}, {}};
  out.certs = scheme.prover(out.instance.graph);
  out.print = fingerprint(out.instance.graph, out.certs, out.instance.root, r);
  return out;
}

CollisionReport find_collision(int delta, int depth, int r, const Scheme& scheme, int jobs) {
  const std::size_t len = pdelta_half_leaves(delta, depth);
  if (len > 24) throw InputError("half string too long to enumerate");
  const std::size_t count = std::size_t{1} << len;
  const auto half_of = [len](std::size_t index) {
    BitWriter out;
    out.write_fixed(index, static_cast<int>(len));
    return std::move(out).take();
  };

  std::vector<Fingerprint> prints(count);
  std::vector<Fingerprint> shapes(count);
  std::vector<std::vector<std::size_t>> cert_bits(count);
  const auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const LabInstance lab = lab_instance(delta, depth, r, scheme, half_of(i));
      prints[i] = lab.print;
      shapes[i] = structure_fingerprint(lab.instance.graph, lab.instance.root, r);
      for (VertexId v : ball(lab.instance.graph, lab.instance.root, r)) {
        cert_bits[i].push_back(lab.certs[v].size());
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, count);
  if (threads == 1) {
    worker(0, count);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      if (begin < count) pool.emplace_back(worker, begin, std::min(count, begin + chunk));
    }
  }

  CollisionReport report;
  report.instances = count;
  report.distinct_strings = count;  // S = XX is injective in X
  std::set<BitString> structures;
  std::map<BitString, std::size_t> seen;
  for (std::size_t i = 0; i < count; ++i) {
    structures.insert(shapes[i].bits);
    if (report.max_cert_bits_on_t.size() < cert_bits[i].size()) {
      report.max_cert_bits_on_t.resize(cert_bits[i].size(), 0);
    }
    for (std::size_t k = 0; k < cert_bits[i].size(); ++k) {
      report.max_cert_bits_on_t[k] = std::max(report.max_cert_bits_on_t[k], cert_bits[i][k]);
    }
    auto [it, fresh] = seen.emplace(prints[i].bits, i);
    if (!fresh && !report.collision) report.collision = {it->second, i};
  }
  report.distinct_fingerprints = seen.size();
  report.structure_patterns = structures.size();
  report.fingerprint_space = report.structure_patterns;
  for (std::size_t b : report.max_cert_bits_on_t) {
    const std::uint64_t strings = b >= 63 ? UINT64_MAX : (std::uint64_t{2} << b) - 1;
    report.fingerprint_space = saturating_mul(report.fingerprint_space, strings);
  }
  if (report.collision) {
    report.first = lab_instance(delta, depth, r, scheme, half_of(report.collision->first));
    report.second = lab_instance(delta, depth, r, scheme, half_of(report.collision->second));
  }
  return report;
}

GlueResult glue(const LabInstance& h1, const LabInstance& h2, int r) {
  const PDeltaInstance& a = h1.instance;
  const PDeltaInstance& b = h2.instance;
  if (a.delta != b.delta || a.depth != b.depth || a.graph.order() != b.graph.order()) {
    throw InputError("glue needs two instances of the same shape");
  }
  if (a.root != b.root || a.left != b.left || a.right != b.right || a.parent != b.parent) {
    throw InputError("glue needs the same fixed identifier assignment");
  }
  if (structure_fingerprint(a.graph, a.root, r) != structure_fingerprint(b.graph, b.root, r)) {
    throw InputError("instances differ on T");
  }
  if (a.leaf_string() == b.leaf_string()) throw InputError("glue needs S(H1) != S(H2)");

  const std::size_t n = a.graph.order();
  const auto left = subtree_mask(a, a.left);
  const auto right = subtree_mask(b, b.right);
  std::vector<Edge> edges;
  for (auto [u, v] : a.graph.edges()) {
    if (left[u] && left[v]) edges.emplace_back(u, v);
  }
  for (auto [u, v] : b.graph.edges()) {
    if (right[u] && right[v]) edges.emplace_back(u, v);
  }
  edges.emplace_back(a.root, a.left);
  edges.emplace_back(a.root, b.right);

  std::vector<BitString> labels(n);
  CertificateAssignment certs(n);
  for (VertexId v = 1; v <= n; ++v) {
    const bool from_right = right[v];
    labels[v - 1] = (from_right ? b.graph : a.graph).label(v);
    certs[v] = (from_right ? h2.certs : h1.certs)[v];
  }
  GlueResult out;
  out.graph = Graph(n, std::move(edges), std::move(labels));
  out.certs = std::move(certs);
  out.left_half = a.half;
  out.right_half = b.half;
  out.membership = pdelta_membership(out.graph, a.delta);
  return out;
}

Verdict demonstrate(const Scheme& scheme, const GlueResult& glued, int jobs) {
  return run_all(scheme, glued.graph, glued.certs, jobs);
}

}  // namespace localcert
