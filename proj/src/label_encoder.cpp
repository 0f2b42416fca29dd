#include "localcert/label_encoder.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>

namespace localcert {

std::vector<int> GadgetPath::leaf_counts() const {
  std::vector<int> out;
  for (const auto& l : leaves) out.push_back(static_cast<int>(l.size()));
  return out;
}

std::size_t GadgetPath::vertex_count() const {
  std::size_t count = 1 + path.size();
  for (const auto& l : leaves) count += l.size();
  return count;
}

EncodedGraph encode_graph_detailed(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges = g.edges();
  std::vector<GadgetPath> gadgets(n);
  VertexId next = static_cast<VertexId>(n + 1);
  for (VertexId v = 1; v <= n; ++v) {
    GadgetPath& gp = gadgets[v - 1];
    gp.host = v;
    gp.marker = next++;
    edges.emplace_back(v, gp.marker);
    const BitString& label = g.label(v);
    VertexId prev = v;
    for (std::size_t i = 0; i <= label.size(); ++i) {
      const VertexId p = next++;
      edges.emplace_back(prev, p);
      gp.path.push_back(p);
      gp.leaves.emplace_back();
      const int count = i == label.size() ? 4 : (label[i] ? 3 : 2);
      for (int k = 0; k < count; ++k) {
        const VertexId leaf = next++;
        edges.emplace_back(p, leaf);
        gp.leaves.back().push_back(leaf);
      }
      prev = p;
    }
  }
  return EncodedGraph{Graph(next - 1, std::move(edges)), n, std::move(gadgets)};
}

Graph encode_graph(const Graph& g) { return encode_graph_detailed(g).graph; }

std::size_t gadget_host_count(std::size_t m, std::size_t ones) { return 7 + 3 * m + ones; }

DecodeError::DecodeError(VertexId vertex, const std::string& what)
    : InputError("vertex " + std::to_string(vertex) + ": " + what), vertex_(vertex) {}

DecodedGraph decode_graph_detailed(const Graph& h) {
  const std::size_t n = h.order();
  const auto is_leaf = [&](VertexId x) { return h.degree(x) == 1; };
  std::vector<int> leaf_count(n + 1, 0);
  for (VertexId x = 1; x <= n; ++x) {
    for (VertexId y : h.neighbors(x)) {
      if (!is_leaf(y)) continue;
      if (is_leaf(x)) throw DecodeError(x, "leaf attached to a leaf");
      ++leaf_count[x];
    }
  }
  std::size_t hosts = 0;
  for (VertexId x = 1; x <= n; ++x) {
    if (is_leaf(x)) continue;
    if (leaf_count[x] == 0) throw DecodeError(x, "no leaf neighbour, so no gadget role");
    if (leaf_count[x] > 4) throw DecodeError(x, std::to_string(leaf_count[x]) + " leaf neighbours");
    if (leaf_count[x] == 1) ++hosts;
  }
  const auto is_host = [&](VertexId x) { return !is_leaf(x) && leaf_count[x] == 1; };
  for (VertexId x = 1; x <= hosts; ++x) {
    if (!is_host(x)) throw DecodeError(x, "identifier below the host count is not an original vertex");
  }

  std::vector<bool> visited(n + 1, false);
  std::vector<Edge> edges;
  std::vector<BitString> labels(hosts);
  std::vector<GadgetPath> gadgets(hosts);
  for (VertexId v = 1; v <= hosts; ++v) {
    GadgetPath& gp = gadgets[v - 1];
    gp.host = v;
    visited[v] = true;
    VertexId first = 0;
    for (VertexId u : h.neighbors(v)) {
      if (is_leaf(u)) {
        gp.marker = u;
        visited[u] = true;
      } else if (is_host(u)) {
        if (v < u) edges.emplace_back(v, u);
      } else if (first != 0) {
        throw DecodeError(v, "more than one gadget path");
      } else {
        first = u;
      }
    }
    if (first == 0) throw DecodeError(v, "no gadget path");

    VertexId prev = v;
    VertexId cur = first;
    BitString label;
    while (true) {
      if (visited[cur]) throw DecodeError(cur, "shared by two gadgets");
      visited[cur] = true;
      gp.path.push_back(cur);
      gp.leaves.emplace_back();
      std::vector<VertexId> onward;
      for (VertexId u : h.neighbors(cur)) {
        if (is_leaf(u)) {
          visited[u] = true;
          gp.leaves.back().push_back(u);
        } else if (u != prev) {
          onward.push_back(u);
        }
      }
      if (leaf_count[cur] == 4) {
        if (!onward.empty()) throw DecodeError(cur, "terminator continues");
        break;
      }
      label.push_back(leaf_count[cur] == 3);
      if (onward.empty()) throw DecodeError(cur, "missing terminator");
      if (onward.size() > 1) throw DecodeError(cur, "gadget path branches");
      if (is_host(onward.front())) throw DecodeError(cur, "missing terminator before an original vertex");
      prev = cur;
      cur = onward.front();
    }
    labels[v - 1] = std::move(label);
  }
  for (VertexId x = 1; x <= n; ++x) {
    if (!visited[x]) throw DecodeError(x, "belongs to no gadget");
  }
  return DecodedGraph{Graph(hosts, std::move(edges), std::move(labels)), std::move(gadgets)};
}

Graph decode_graph(const Graph& h) { return decode_graph_detailed(h).graph; }

BitString encode_wrapped(const WrappedCert& c) {
  BitWriter out;
  if (c.leaf) {
    out.write_bit(true);
    return std::move(out).take();
  }
  out.write_bit(false);
  out.write_bit(c.on_path);
  out.write_sized(c.s);
  out.write_sized(c.o);
  if (!c.on_path) out.write_varint(c.order);
  return std::move(out).take();
}

std::optional<WrappedCert> decode_wrapped(const BitString& bits) {
  BitReader in(bits);
  WrappedCert c;
  const auto leaf = in.read_bit();
  if (!leaf) return std::nullopt;
  if (*leaf) {
    c.leaf = true;
    return in.at_end() ? std::optional(c) : std::nullopt;
  }
  const auto on_path = in.read_bit();
  if (!on_path) return std::nullopt;
  c.on_path = *on_path;
  auto s = in.read_sized();
  auto o = in.read_sized();
  if (!s || !o) return std::nullopt;
  c.s = std::move(*s);
  c.o = std::move(*o);
  if (!c.on_path) {
    const auto order = in.read_varint();
    if (!order) return std::nullopt;
    c.order = *order;
  }
  if (!in.at_end()) return std::nullopt;
  return c;
}

CertificateAssignment wrap_unlabeled_certificates(const DecodedGraph& h,
                                                  const CertificateAssignment& labeled_certs) {
  const std::size_t k = h.graph.order();
  std::size_t total = k;
  for (const auto& gp : h.gadgets) total += gp.vertex_count();
  CertificateAssignment out(total);
  const BitString leaf = encode_wrapped(WrappedCert{true, false, {}, {}, 0});
  for (VertexId v = 1; v <= k; ++v) {
    const GadgetPath& gp = h.gadgets[v - 1];
    const BitString& label = h.graph.label(v);
    out[v] = encode_wrapped(WrappedCert{false, false, label, labeled_certs[v], k});
    out[gp.marker] = leaf;
    for (std::size_t i = 0; i < gp.path.size(); ++i) {
      const std::size_t from = std::min(i, label.size());
      out[gp.path[i]] = encode_wrapped(WrappedCert{false, true, label.substr(from, label.size() - from), {}, 0});
      for (VertexId l : gp.leaves[i]) out[l] = leaf;
    }
  }
  return out;
}

namespace {

bool unlabeled_wrap_accepts(const Scheme& labeled, const LocalView& view) {
  const VertexId v = view.center();
  std::unordered_map<VertexId, std::optional<WrappedCert>> parsed;
  for (const auto& x : view.vertices()) parsed.emplace(x.id, decode_wrapped(x.cert));
  const auto& own = parsed.at(v);
  if (view.degree(v) == 1) return own && own->leaf;
  if (!own || own->leaf) return false;

  int leaves = 0;
  std::vector<const WrappedCert*> inner;
  for (VertexId u : view.neighbors(v)) {
    const auto& c = parsed.at(u);
    if (!c) return false;
    if (c->leaf) {
      ++leaves;
    } else {
      inner.push_back(&*c);
    }
  }
  const BitString& s = own->s;
  switch (leaves) {
    case 4:
      return own->on_path && s.empty() && own->o.empty() && inner.size() == 1;
    case 3:
    case 2: {
      if (!own->on_path || !own->o.empty() || inner.size() != 2) return false;
      const auto below = [&](const WrappedCert& w) {
        return w.s.size() + 1 == s.size() && s[0] == (leaves == 3) && s.substr(1, w.s.size()) == w.s;
      };
      const auto above = [&](const WrappedCert& w) {
        return w.on_path ? w.s.size() == s.size() + 1 : w.s == s;
      };
      return (below(*inner[0]) && above(*inner[1])) || (below(*inner[1]) && above(*inner[0]));
    }
    case 1: {
      if (own->on_path || own->order == 0) return false;
      int paths = 0;
      for (const WrappedCert* w : inner) {
        if (w->on_path) {
          if (w->s != s) return false;
          ++paths;
        } else if (w->order != own->order) {
          return false;
        }
      }
      if (paths != 1) return false;

      LocalView::Source hosts;
      for (const auto& x : view.vertices()) {
        const auto& c = parsed.at(x.id);
        if (!c || c->leaf || c->on_path) continue;
        hosts.ids.push_back(x.id);
        hosts.labels.push_back(c->s);
        hosts.certs.push_back(c->o);
      }
      const auto is_host = [&](VertexId x) {
        return std::binary_search(hosts.ids.begin(), hosts.ids.end(), x);
      };
      for (const auto& x : view.vertices()) {
        if (!is_host(x.id)) continue;
        for (VertexId y : x.neighbors) {
          if (x.id < y && is_host(y)) hosts.edges.emplace_back(x.id, y);
        }
      }
      return labeled.verifier(LocalView::induced(hosts, v, labeled.radius, own->order));
    }
    default:
      return false;
  }
}

}  // namespace

Scheme wrap_unlabeled(const Scheme& labeled) {
  Scheme out;
  out.name = "wrap-u:" + labeled.name;
  out.radius = std::max(labeled.radius, 1);
  out.prover = [labeled](const Graph& h) {
    DecodedGraph decoded{Graph(1, {}), {}};
    try {
      decoded = decode_graph_detailed(h);
    } catch (const DecodeError& e) {
      throw ContractViolation(std::string("not an encoded graph: ") + e.what());
    }
    return wrap_unlabeled_certificates(decoded, labeled.prover(decoded.graph));
  };
  out.verifier = [labeled](const LocalView& view) { return unlabeled_wrap_accepts(labeled, view); };
  return out;
}

BitString encode_labeled_wrap(const LabeledWrapCert& c) {
  BitWriter out;
  out.write_sized(c.own);
  out.write_varint(c.encoded_order);
  out.write_varint(c.base);
  out.write_varint(c.leaf_counts.size());
  for (int count : c.leaf_counts) {
    if (count < 2 || count > 4) throw InputError("leaf count outside 2..4");
    out.write_fixed(static_cast<std::uint64_t>(count - 2), 2);
  }
  std::size_t expected = 1;
  for (int count : c.leaf_counts) expected += 1 + static_cast<std::size_t>(count);
  if (c.gadget_certs.size() != expected) throw InputError("gadget certificate count mismatch");
  for (const auto& cert : c.gadget_certs) out.write_sized(cert);
  return std::move(out).take();
}

std::optional<LabeledWrapCert> decode_labeled_wrap(const BitString& bits) {
  BitReader in(bits);
  LabeledWrapCert c;
  auto own = in.read_sized();
  const auto order = in.read_varint();
  const auto base = in.read_varint();
  const auto count = in.read_varint();
  if (!own || !order || !base || !count || *count == 0 || *count > in.remaining() / 2) {
    return std::nullopt;
  }
  c.own = std::move(*own);
  c.encoded_order = *order;
  c.base = *base;
  std::size_t expected = 1;
  for (std::uint64_t i = 0; i < *count; ++i) {
    const auto code = in.read_fixed(2);
    if (!code || *code == 3) return std::nullopt;
    c.leaf_counts.push_back(static_cast<int>(*code) + 2);
    expected += 3 + *code;
  }
  if (expected > in.remaining()) return std::nullopt;
  for (std::size_t i = 0; i < expected; ++i) {
    auto cert = in.read_sized();
    if (!cert) return std::nullopt;
    c.gadget_certs.push_back(std::move(*cert));
  }
  if (!in.at_end()) return std::nullopt;
  return c;
}

GadgetPath gadget_from(VertexId host, const LabeledWrapCert& c) {
  GadgetPath gp;
  gp.host = host;
  VertexId next = static_cast<VertexId>(c.base);
  gp.marker = next++;
  for (int count : c.leaf_counts) {
    gp.path.push_back(next++);
    gp.leaves.emplace_back();
    for (int k = 0; k < count; ++k) gp.leaves.back().push_back(next++);
  }
  return gp;
}

CertificateAssignment wrap_labeled_certificates(const EncodedGraph& h,
                                                const CertificateAssignment& unlabeled_certs) {
  CertificateAssignment out(h.original_order);
  for (VertexId v = 1; v <= h.original_order; ++v) {
    const GadgetPath& gp = h.gadgets[v - 1];
    LabeledWrapCert c;
    c.own = unlabeled_certs[v];
    c.encoded_order = h.graph.order();
    c.base = gp.marker;
    c.leaf_counts = gp.leaf_counts();
    c.gadget_certs.push_back(unlabeled_certs[gp.marker]);
    for (std::size_t i = 0; i < gp.path.size(); ++i) {
      c.gadget_certs.push_back(unlabeled_certs[gp.path[i]]);
      for (VertexId l : gp.leaves[i]) c.gadget_certs.push_back(unlabeled_certs[l]);
    }
    if (gadget_from(v, c).path != gp.path) {
      throw std::logic_error("gadget identifiers are not consecutive");
    }
    out[v] = encode_labeled_wrap(c);
  }
  return out;
}

namespace {

bool labeled_wrap_accepts(const Scheme& unlabeled, const LocalView& view) {
  const VertexId v = view.center();
  const int r = view.radius();
  const std::size_t n = view.host_order();
  std::map<VertexId, LabeledWrapCert> certs;
  for (const auto& x : view.vertices()) {
    auto c = decode_labeled_wrap(x.cert);
    if (!c) return false;
    certs.emplace(x.id, std::move(*c));
  }

  const LabeledWrapCert& own = certs.at(v);
  const BitString& label = view.label(v);
  if (own.leaf_counts.size() != label.size() + 1) return false;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (own.leaf_counts[i] != (label[i] ? 3 : 2)) return false;
  }
  if (own.leaf_counts.back() != 4) return false;

  const std::uint64_t big_n = own.encoded_order;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals;
  for (const auto& [id, c] : certs) {
    if (c.encoded_order != big_n || c.base <= n) return false;
    const std::uint64_t last = c.base + c.gadget_size() - 1;
    if (last > big_n) return false;
    intervals.emplace_back(c.base, last);
  }
  std::sort(intervals.begin(), intervals.end());
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].first <= intervals[i - 1].second) return false;
  }

  LocalView::Source rebuilt;
  std::unordered_map<VertexId, std::vector<VertexId>> adjacency;
  std::unordered_map<VertexId, bool> is_host;
  const auto add_vertex = [&](VertexId id, const BitString& cert, bool host) {
    rebuilt.ids.push_back(id);
    rebuilt.labels.emplace_back();
    rebuilt.certs.push_back(cert);
    is_host[id] = host;
  };
  const auto add_edge = [&](VertexId a, VertexId b) {
    rebuilt.edges.emplace_back(a, b);
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  };
  for (const auto& x : view.vertices()) {
    add_vertex(x.id, certs.at(x.id).own, true);
    for (VertexId y : x.neighbors) {
      if (x.id < y) add_edge(x.id, y);
    }
  }
  for (const auto& [id, c] : certs) {
    const GadgetPath gp = gadget_from(id, c);
    std::size_t k = 0;
    add_vertex(gp.marker, c.gadget_certs[k++], false);
    add_edge(id, gp.marker);
    VertexId prev = id;
    for (std::size_t i = 0; i < gp.path.size(); ++i) {
      add_vertex(gp.path[i], c.gadget_certs[k++], false);
      add_edge(prev, gp.path[i]);
      for (VertexId l : gp.leaves[i]) {
        add_vertex(l, c.gadget_certs[k++], false);
        add_edge(gp.path[i], l);
      }
      prev = gp.path[i];
    }
  }

  // A rebuilt vertex is simulated when every host closer than r to it has
  // its full neighbourhood in the view; only then is its ball exact.
  for (VertexId x : rebuilt.ids) {
    std::unordered_map<VertexId, int> dist{{x, 0}};
    std::deque<VertexId> queue{x};
    bool exact = true;
    while (!queue.empty() && exact) {
      const VertexId y = queue.front();
      queue.pop_front();
      const int d = dist.at(y);
      if (d >= r) continue;
      if (is_host.at(y) && view.dist(y) >= r) exact = false;
      for (VertexId z : adjacency[y]) {
        if (dist.emplace(z, d + 1).second) queue.push_back(z);
      }
    }
    if (!exact) continue;
    if (!unlabeled.verifier(LocalView::induced(rebuilt, x, r, big_n))) return false;
  }
  return true;
}

}  // namespace

Scheme wrap_labeled(const Scheme& unlabeled) {
  Scheme out;
  out.name = "wrap-l:" + unlabeled.name;
  out.radius = unlabeled.radius;
  out.prover = [unlabeled](const Graph& g) {
    const EncodedGraph h = encode_graph_detailed(g);
    return wrap_labeled_certificates(h, unlabeled.prover(h.graph));
  };
  out.verifier = [unlabeled](const LocalView& view) { return labeled_wrap_accepts(unlabeled, view); };
  return out;
}

std::size_t wrap_unlabeled_size_bound(std::size_t cert_bits, std::size_t label_bits, std::size_t order) {
  return 2 + gamma_length(label_bits) + label_bits + gamma_length(cert_bits) + cert_bits +
         gamma_length(order);
}

std::size_t wrap_labeled_size_bound(std::size_t cert_bits, std::size_t label_bits,
                                    std::size_t encoded_order) {
  const std::size_t sized = gamma_length(cert_bits) + cert_bits;
  const std::size_t path = label_bits + 1;
  return sized + 2 * gamma_length(encoded_order) + gamma_length(path) + 2 * path + (1 + 5 * path) * sized;
}

}  // namespace localcert
