#include "localcert/path_canonical.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "localcert/generators.hpp"
#include "localcert/packet.hpp"
#include "localcert/schemes.hpp"

namespace localcert {

bool is_path(const Graph& g) {
  return g.size() + 1 == g.order() && g.max_degree() <= 2;
}

std::vector<VertexId> canonical_ids(const Graph& g) {
  if (!is_path(g)) throw ContractViolation("canonical identifiers need a path");
  const std::size_t n = g.order();
  std::vector<VertexId> j(n + 1, 0);
  VertexId start = 1;
  if (n > 1) {
    for (VertexId v = n; v >= 1; --v) {
      if (g.degree(v) == 1) start = v;
    }
  }
  VertexId prev = 0;
  VertexId cur = start;
  for (VertexId pos = 1; pos <= n; ++pos) {
    j[cur] = pos;
    VertexId next = 0;
    for (VertexId u : g.neighbors(cur)) {
      if (u != prev) next = u;
    }
    prev = cur;
    cur = next;
  }
  return j;
}

int canonical_id_bits(std::size_t n) { return n <= 1 ? 0 : bit_width_for(n - 1); }

BitString encode_lifted(const LiftedCert& c, std::size_t n) {
  if (c.j < 1 || c.j > n) throw InputError("canonical identifier outside 1..n");
  BitWriter out;
  out.write_fixed(c.j - 1, canonical_id_bits(n));
  out.write_bits(c.weak);
  return std::move(out).take();
}

std::optional<LiftedCert> decode_lifted(const BitString& bits, std::size_t n) {
  const int w = canonical_id_bits(n);
  BitReader in(bits);
  const auto j = in.read_fixed(w);
  if (!j || *j >= n) return std::nullopt;
  return LiftedCert{static_cast<VertexId>(*j + 1), bits.substr(w, bits.size() - w)};
}

namespace {

// Center of `view` is consistent with a path numbered 1..n in order.
template <typename JOf>
bool canonical_at_center(const LocalView& view, JOf&& j_of) {
  const VertexId v = view.center();
  const std::size_t n = view.host_order();
  const VertexId j = j_of(v);
  const auto nbrs = view.neighbors(v);
  std::vector<VertexId> seen;
  for (VertexId u : nbrs) seen.push_back(j_of(u));
  std::sort(seen.begin(), seen.end());
  switch (nbrs.size()) {
    case 0:
      return n == 1 && j == 1;
    case 1:
      if (j == 1) return n >= 2 && seen[0] == 2;
      return j == n && n >= 2 && seen[0] == n - 1;
    case 2:
      return j > 1 && j < n && seen[0] == j - 1 && seen[1] == j + 1;
    default:
      return false;
  }
}

}  // namespace

CertificateAssignment lifted_certificates(const std::vector<VertexId>& j,
                                          const CertificateAssignment& weak_by_j) {
  const std::size_t n = j.size() - 1;
  CertificateAssignment out(n);
  for (VertexId v = 1; v <= n; ++v) out[v] = encode_lifted(LiftedCert{j[v], weak_by_j[j[v]]}, n);
  return out;
}

Scheme lift_weak(const Scheme& weak) {
  Scheme out;
  out.name = "lift:" + weak.name;
  out.radius = weak.radius;
  out.prover = [weak](const Graph& g) {
    const auto j = canonical_ids(g);
    const std::vector<VertexId> perm(j.begin() + 1, j.end());
    return lifted_certificates(j, weak.prover(g.relabeled(perm)));
  };
  out.verifier = [weak](const LocalView& view) {
    const std::size_t n = view.host_order();
    std::unordered_map<VertexId, LiftedCert> certs;
    std::vector<VertexId> js;
    for (const auto& x : view.vertices()) {
      auto c = decode_lifted(x.cert, n);
      if (!c) return false;
      js.push_back(c->j);
      certs.emplace(x.id, std::move(*c));
    }
    std::sort(js.begin(), js.end());
    if (std::adjacent_find(js.begin(), js.end()) != js.end()) return false;
    if (!canonical_at_center(view, [&](VertexId u) { return certs.at(u).j; })) return false;

    LocalView::Source renamed;
    for (const auto& x : view.vertices()) {
      const LiftedCert& c = certs.at(x.id);
      renamed.ids.push_back(c.j);
      renamed.labels.push_back(x.label);
      renamed.certs.push_back(c.weak);
      for (VertexId y : x.neighbors) {
        if (x.id < y) renamed.edges.emplace_back(c.j, certs.at(y).j);
      }
    }
    return weak.verifier(LocalView::induced(renamed, certs.at(view.center()).j, weak.radius, n));
  };
  return out;
}

std::vector<std::vector<VertexId>> locally_canonical_assignments(std::size_t n) {
  const Graph g = path_graph(n);
  const Scheme scheme = lift_weak(scheme_accept_all(1));
  std::vector<BitString> pool;
  for (VertexId j = 1; j <= n; ++j) pool.push_back(encode_lifted(LiftedCert{j, {}}, n));

  AssignmentSearch search;
  search.n = n;
  search.candidate_counts.assign(n, n);
  for (VertexId v = 1; v <= n; ++v) search.depends_on.push_back(ball(g, v, 1));
  search.check = [&](VertexId v, const std::vector<std::size_t>& choice) {
    CertificateAssignment certs(n);
    for (VertexId u : ball(g, v, 1)) certs[u] = pool[choice[u - 1]];
    return scheme.verifier(induced_view(g, certs, v, 1));
  };
  std::vector<std::vector<VertexId>> found;
  search.on_found = [&](const std::vector<std::size_t>& choice) {
    std::vector<VertexId> j;
    for (std::size_t c : choice) j.push_back(static_cast<VertexId>(c + 1));
    found.push_back(std::move(j));
    return true;
  };
  SearchLimits limits;
  limits.max_evaluations = UINT64_MAX;
  search_accepting_assignment(search, limits);
  return found;
}

BitString encode_shaved(const ShavedCert& c, std::size_t n) {
  if (c.j < 1 || c.j > n) throw InputError("canonical identifier outside 1..n");
  const auto entries = static_cast<std::size_t>(std::count(c.present.begin(), c.present.end(), true));
  if (entries != c.labels.size() || entries != c.certs.size()) throw InputError("window entry count mismatch");
  BitWriter out;
  out.write_fixed(c.j - 1, canonical_id_bits(n));
  for (bool p : c.present) out.write_bit(p);
  for (std::size_t i = 0; i < entries; ++i) {
    out.write_sized(c.labels[i]);
    out.write_sized(c.certs[i]);
  }
  return std::move(out).take();
}

std::optional<ShavedCert> decode_shaved(const BitString& bits, std::size_t n, int d) {
  BitReader in(bits);
  ShavedCert c;
  const auto j = in.read_fixed(canonical_id_bits(n));
  if (!j || *j >= n) return std::nullopt;
  c.j = static_cast<VertexId>(*j + 1);
  for (int k = 0; k < 2 * d + 1; ++k) {
    const auto p = in.read_bit();
    if (!p) return std::nullopt;
    c.present.push_back(*p);
  }
  for (bool p : c.present) {
    if (!p) continue;
    auto label = in.read_sized();
    auto cert = in.read_sized();
    if (!label || !cert) return std::nullopt;
    c.labels.push_back(std::move(*label));
    c.certs.push_back(std::move(*cert));
  }
  if (!in.at_end()) return std::nullopt;
  return c;
}

namespace {

// Entries of a window keyed by absolute position.
std::map<long, std::pair<BitString, BitString>> window_entries(const ShavedCert& c, int d) {
  std::map<long, std::pair<BitString, BitString>> out;
  std::size_t k = 0;
  for (int i = 0; i < 2 * d + 1; ++i) {
    if (!c.present[i]) continue;
    out.emplace(static_cast<long>(c.j) - d + i, std::make_pair(c.labels[k], c.certs[k]));
    ++k;
  }
  return out;
}

}  // namespace

CertificateAssignment shaved_certificates(const Graph& g, const std::vector<VertexId>& j,
                                          const CertificateAssignment& base_by_j, int d) {
  const std::size_t n = g.order();
  std::vector<BitString> label_by_j(n + 1);
  for (VertexId v = 1; v <= n; ++v) label_by_j[j[v]] = g.label(v);
  CertificateAssignment out(n);
  for (VertexId v = 1; v <= n; ++v) {
    ShavedCert c;
    c.j = j[v];
    for (long pos = static_cast<long>(j[v]) - d; pos <= static_cast<long>(j[v]) + d; ++pos) {
      const bool inside = pos >= 1 && pos <= static_cast<long>(n);
      c.present.push_back(inside);
      if (!inside) continue;
      c.labels.push_back(label_by_j[pos]);
      c.certs.push_back(base_by_j[static_cast<VertexId>(pos)]);
    }
    out[v] = encode_shaved(c, n);
  }
  return out;
}

Scheme shave(const Scheme& base) {
  const int d = base.radius;
  Scheme out;
  out.name = "shave:" + base.name;
  out.radius = 1;
  out.prover = [base, d](const Graph& g) {
    const auto j = canonical_ids(g);
    const std::vector<VertexId> perm(j.begin() + 1, j.end());
    return shaved_certificates(g, j, base.prover(g.relabeled(perm)), d);
  };
  out.verifier = [base, d](const LocalView& view) {
    const std::size_t n = view.host_order();
    const VertexId v = view.center();
    std::unordered_map<VertexId, ShavedCert> certs;
    for (VertexId u : view.neighbors(v)) {
      auto c = decode_shaved(view.cert(u), n, d);
      if (!c) return false;
      certs.emplace(u, std::move(*c));
    }
    auto own = decode_shaved(view.cert(v), n, d);
    if (!own) return false;
    certs.emplace(v, *own);
    if (!canonical_at_center(view, [&](VertexId u) { return certs.at(u).j; })) return false;

    for (int i = 0; i < 2 * d + 1; ++i) {
      const long pos = static_cast<long>(own->j) - d + i;
      if (own->present[i] != (pos >= 1 && pos <= static_cast<long>(n))) return false;
    }
    const auto mine = window_entries(*own, d);
    if (mine.at(own->j).first != view.label(v)) return false;
    for (VertexId u : view.neighbors(v)) {
      for (const auto& [pos, entry] : window_entries(certs.at(u), d)) {
        const auto it = mine.find(pos);
        if (it != mine.end() && it->second != entry) return false;
      }
    }

    LocalView::Source segment;
    for (const auto& [pos, entry] : mine) {
      segment.ids.push_back(static_cast<VertexId>(pos));
      segment.labels.push_back(entry.first);
      segment.certs.push_back(entry.second);
      if (mine.count(pos + 1)) segment.edges.emplace_back(static_cast<VertexId>(pos), static_cast<VertexId>(pos + 1));
    }
    return base.verifier(LocalView::induced(segment, own->j, d, n));
  };
  return out;
}

std::optional<std::vector<std::pair<BitString, BitString>>> extract_virtual(
    const Graph& g, const CertificateAssignment& certs, int d) {
  const std::size_t n = g.order();
  std::vector<std::optional<std::pair<BitString, BitString>>> by_pos(n + 1);
  for (VertexId v = 1; v <= n; ++v) {
    const auto c = decode_shaved(certs[v], n, d);
    if (!c) return std::nullopt;
    for (const auto& [pos, entry] : window_entries(*c, d)) {
      if (pos < 1 || pos > static_cast<long>(n)) return std::nullopt;
      auto& slot = by_pos[pos];
      if (slot && *slot != entry) return std::nullopt;
      slot = entry;
    }
  }
  std::vector<std::pair<BitString, BitString>> out;
  for (std::size_t pos = 1; pos <= n; ++pos) {
    if (!by_pos[pos]) return std::nullopt;
    out.push_back(*by_pos[pos]);
  }
  return out;
}

std::size_t shaved_size_bound(int d, std::size_t cert_bits, std::size_t label_bits, std::size_t n) {
  const std::size_t window = 2 * static_cast<std::size_t>(d) + 1;
  const std::size_t framing = window * (1 + gamma_length(label_bits) + label_bits + gamma_length(cert_bits));
  return canonical_id_bits(n) + window * cert_bits + framing;
}

std::size_t shaved_identifier_fields() { return 1; }

std::size_t generic_identifier_fields(const BitString& reduced_cert, std::size_t n, int delta) {
  std::size_t count = 0;
  for (const Packet& p : decode_packets(reduced_cert, n, delta)) count += 1 + p.neighbors.size();
  return count;
}

}  // namespace localcert
