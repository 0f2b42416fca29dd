#include "localcert/radius_reduction.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace localcert {

namespace {

using Sigma = std::map<VertexId, PacketSet>;

Sigma decode_view(const LocalView& view, int delta) {
  Sigma sigma;
  for (const auto& vx : view.vertices()) {
    sigma.emplace(vx.id, decode_packets(vx.cert, view.host_order(), delta));
  }
  return sigma;
}

std::optional<LocalView> rebuild(const LocalView& view, const Sigma& sigma, int radius) {
  struct Choice {
    int dist;
    VertexId holder;
    const Packet* packet;
  };
  std::map<VertexId, Choice> best;
  for (const auto& vx : view.vertices()) {
    for (const Packet& p : sigma.at(vx.id)) {
      if (find_packet(sigma.at(vx.id), p.origin) != &p) continue;
      auto it = best.find(p.origin);
      if (it == best.end() ||
          std::tie(vx.dist, vx.id) < std::tie(it->second.dist, it->second.holder)) {
        best[p.origin] = Choice{vx.dist, vx.id, &p};
      }
    }
  }
  if (!best.contains(view.center())) return std::nullopt;

  LocalView::Source src;
  for (const auto& [x, choice] : best) {
    src.ids.push_back(x);
    src.labels.push_back(choice.packet->label);
    src.certs.push_back(choice.packet->cert);
    for (VertexId y : choice.packet->neighbors) {
      if (y == x) return std::nullopt;
      auto other = best.find(y);
      if (other == best.end()) continue;
      const auto& back = other->second.packet->neighbors;
      if (!std::binary_search(back.begin(), back.end(), x)) return std::nullopt;
      if (x < y) src.edges.emplace_back(x, y);
    }
  }
  return LocalView::induced(src, view.center(), radius, view.host_order());
}

std::vector<std::pair<VertexId, int>> ball_with_distances(const Graph& g, VertexId u, int radius) {
  const auto dist = bfs_distances(g, u);
  std::vector<std::pair<VertexId, int>> out;
  for (VertexId x = 1; x <= g.order(); ++x) {
    if (dist[x] >= 0 && dist[x] <= radius) out.emplace_back(x, dist[x]);
  }
  return out;
}

Packet packet_of(const Graph& g, const CertificateAssignment& base_certs, VertexId x, int d) {
  const auto nb = g.neighbors(x);
  return Packet{x, d, std::vector<VertexId>(nb.begin(), nb.end()), g.label(x), base_certs[x]};
}

}  // namespace

Scheme reduce(const Scheme& base, int delta, std::optional<std::size_t> max_degree) {
  if (delta <= 0 || delta >= base.radius) {
    throw InputError("radius reduction needs 0 < delta < r (delta=" + std::to_string(delta) +
                     ", r=" + std::to_string(base.radius) + ")");
  }
  Scheme s;
  s.name = "reduce:" + std::to_string(delta) + ":" + base.name;
  s.radius = base.radius - delta;
  s.prover = [base, delta, max_degree](const Graph& g) {
    if (max_degree && g.max_degree() > *max_degree) {
      throw ContractViolation("graph exceeds the promised maximum degree");
    }
    return reduced_prover(base, delta, g);
  };
  s.verifier = [base, delta, max_degree](const LocalView& view) {
    return reduced_verifier(view, delta, base, max_degree).accepted;
  };
  return s;
}

CertificateAssignment packets_for(const Graph& g, const CertificateAssignment& base_certs,
                                  int delta) {
  CertificateAssignment out(g.order());
  for (VertexId u = 1; u <= g.order(); ++u) {
    PacketSet packets;
    for (auto [x, d] : ball_with_distances(g, u, delta)) {
      packets.push_back(packet_of(g, base_certs, x, d));
    }
    out[u] = encode_packets(canonical(std::move(packets)), g.order(), delta);
  }
  return out;
}

CertificateAssignment reduced_prover(const Scheme& base, int delta, const Graph& g) {
  return packets_for(g, base.prover(g), delta);
}

ReducedVerdict reduced_verifier(const LocalView& view, int delta, const Scheme& base,
                                std::optional<std::size_t> max_degree) {
  const auto reject = [](const char* why) { return ReducedVerdict{false, why}; };
  const VertexId v = view.center();
  const auto nbrs = view.neighbors(v);
  if (max_degree && nbrs.size() > *max_degree) return reject("degree");

  const Sigma sigma = decode_view(view, delta);
  const PacketSet& own = sigma.at(v);

  for (std::size_t i = 1; i < own.size(); ++i) {
    if (own[i].origin == own[i - 1].origin) return reject("B1");
  }

  const Packet* self = find_packet(own, v);
  if (self == nullptr || self->d != 0 || self->label != view.label(v) ||
      !std::equal(self->neighbors.begin(), self->neighbors.end(), nbrs.begin(), nbrs.end())) {
    return reject("B2");
  }

  for (const Packet& p : own) {
    if (p.origin == v) continue;
    std::optional<int> nearest;
    for (VertexId x : nbrs) {
      if (const Packet* q = find_packet(sigma.at(x), p.origin)) {
        nearest = std::min(nearest.value_or(q->d), q->d);
      }
    }
    if (p.d < 1 || !nearest || p.d != 1 + *nearest) return reject("B3");
  }

  for (const Packet& p : own) {
    if (p.origin == v) continue;
    const bool fed = std::any_of(nbrs.begin(), nbrs.end(), [&](VertexId x) {
      const Packet* q = find_packet(sigma.at(x), p.origin);
      return q != nullptr && q->d < delta;
    });
    if (!fed) return reject("B4");
  }
  for (VertexId x : nbrs) {
    for (const Packet& q : sigma.at(x)) {
      if (q.origin == v || find_packet(sigma.at(x), q.origin) != &q) continue;
      if (q.d < delta && find_packet(own, q.origin) == nullptr) return reject("B4");
    }
  }

  for (const Packet& p : own) {
    for (VertexId x : nbrs) {
      const Packet* q = find_packet(sigma.at(x), p.origin);
      if (q && (q->neighbors != p.neighbors || q->label != p.label || q->cert != p.cert)) {
        return reject("B5");
      }
    }
  }

  const auto rebuilt = rebuild(view, sigma, base.radius);
  if (!rebuilt) return reject("adjacency");
  if (!base.verifier(*rebuilt)) return reject("B6");
  return ReducedVerdict{true, ""};
}

std::optional<LocalView> reconstruct_view(const LocalView& view, int delta, int radius) {
  return rebuild(view, decode_view(view, delta), radius);
}

std::uint64_t packet_count_bound(std::size_t max_degree, int delta) {
  const std::uint64_t d = std::max<std::size_t>(max_degree, 2);
  if (d == 2) return 2 * static_cast<std::uint64_t>(delta) + 1;
  std::uint64_t p = 1;
  for (int i = 0; i < delta; ++i) p *= d - 1;
  return (d * p - 2) / (d - 2);
}

std::uint64_t per_packet_bits(std::size_t max_degree, std::size_t n, int delta,
                              std::size_t base_bits, std::size_t label_bits) {
  const std::uint64_t w = static_cast<std::uint64_t>(packet_id_bits(n));
  return max_degree * w + w + static_cast<std::uint64_t>(packet_distance_bits(delta)) + base_bits +
         label_bits + gamma_length(max_degree) + gamma_length(label_bits) +
         gamma_length(base_bits);
}

std::uint64_t size_bound(std::size_t max_degree, int delta, std::size_t n, std::size_t base_bits,
                         std::size_t label_bits) {
  const std::uint64_t count = packet_count_bound(max_degree, delta);
  return count * per_packet_bits(max_degree, n, delta, base_bits, label_bits) +
         gamma_length(count);
}

LemmaReport check_lemmas(const Graph& g, const CertificateAssignment& certs, int delta,
                         int base_radius) {
  LemmaReport report;
  const std::size_t n = g.order();
  std::vector<PacketSet> sigma(n + 1);
  for (VertexId u = 1; u <= n; ++u) sigma[u] = decode_packets(certs[u], n, delta);
  const auto note = [&](bool& flag, std::string what) {
    flag = false;
    report.violations.push_back(std::move(what));
  };

  std::vector<std::vector<int>> dist(n + 1);
  for (VertexId u = 1; u <= n; ++u) dist[u] = bfs_distances(g, u);

  std::map<VertexId, const Packet*> first_seen;
  for (VertexId u = 1; u <= n; ++u) {
    for (const Packet& p : sigma[u]) {
      const std::string where = "packet of " + std::to_string(p.origin) + " at " + std::to_string(u);
      if (p.d != dist[u][p.origin]) note(report.distances, "distance: " + where);
      const auto nb = g.neighbors(p.origin);
      if (!std::equal(p.neighbors.begin(), p.neighbors.end(), nb.begin(), nb.end()) ||
          p.label != g.label(p.origin)) {
        note(report.well_formed, "well-formedness: " + where);
      }
      auto [it, fresh] = first_seen.emplace(p.origin, &p);
      if (!fresh && (it->second->neighbors != p.neighbors || it->second->label != p.label ||
                     it->second->cert != p.cert)) {
        note(report.agreement, "agreement: " + where);
      }
    }
    for (VertexId x = 1; x <= n; ++x) {
      const bool has = find_packet(sigma[u], x) != nullptr;
      if (has != (dist[u][x] <= delta)) {
        note(report.membership, "membership: origin " + std::to_string(x) + " at " +
                                    std::to_string(u));
      }
    }
  }

  for (VertexId u = 1; u <= n; ++u) {
    std::vector<bool> visible(n + 1, false);
    for (VertexId w = 1; w <= n; ++w) {
      if (dist[u][w] > base_radius - delta) continue;
      for (const Packet& p : sigma[w]) visible[p.origin] = true;
    }
    for (VertexId x = 1; x <= n; ++x) {
      if (dist[u][x] <= base_radius && !visible[x]) {
        note(report.coverage, "coverage: " + std::to_string(x) + " not visible from " +
                                  std::to_string(u));
      }
    }
  }
  return report;
}

std::optional<VertexId> reconstruction_mismatch(const Scheme& base, int delta, const Graph& g) {
  const auto base_certs = base.prover(g);
  const auto certs = packets_for(g, base_certs, delta);
  for (VertexId v = 1; v <= g.order(); ++v) {
    const auto rebuilt = reconstruct_view(induced_view(g, certs, v, base.radius - delta), delta,
                                          base.radius);
    if (!rebuilt || *rebuilt != induced_view(g, base_certs, v, base.radius)) return v;
  }
  return std::nullopt;
}

SoundnessOutcome payload_soundness_search(const Scheme& base, int delta, const Graph& g,
                                          const std::vector<BitString>& candidates,
                                          const SearchLimits& limits) {
  const std::size_t n = g.order();
  const int reduced_radius = base.radius - delta;
  const CertificateAssignment blank(n);

  std::vector<std::vector<std::pair<VertexId, int>>> held(n + 1);
  for (VertexId u = 1; u <= n; ++u) held[u] = ball_with_distances(g, u, delta);
  std::vector<LocalView> skeletons;
  AssignmentSearch search;
  search.n = n;
  search.candidate_counts.assign(n, candidates.size());
  for (VertexId v = 1; v <= n; ++v) {
    skeletons.push_back(induced_view(g, blank, v, reduced_radius));
    search.depends_on.push_back(ball(g, v, base.radius));
  }

  search.check = [&](VertexId v, const std::vector<std::size_t>& choice) {
    const LocalView& skeleton = skeletons[v - 1];
    std::vector<BitString> certs;
    certs.reserve(skeleton.vertex_count());
    for (const auto& vx : skeleton.vertices()) {
      PacketSet packets;
      for (auto [x, d] : held[vx.id]) {
        const auto nb = g.neighbors(x);
        packets.push_back(Packet{x, d, std::vector<VertexId>(nb.begin(), nb.end()), g.label(x),
                                 candidates[choice[x - 1]]});
      }
      certs.push_back(encode_packets(canonical(std::move(packets)), n, delta));
    }
    return reduced_verifier(skeleton.with_certs(certs), delta, base).accepted;
  };

  const auto found = search_accepting_assignment(search, limits);
  SoundnessOutcome outcome;
  outcome.kind = found.kind;
  outcome.max_bits = 0;
  for (const auto& c : candidates) outcome.max_bits = std::max<int>(outcome.max_bits, c.size());
  outcome.space_size = found.space_size;
  outcome.stopped_at = found.stopped_at;
  outcome.evaluations = found.evaluations;
  if (found.choice) {
    CertificateAssignment base_certs(n);
    for (VertexId v = 1; v <= n; ++v) base_certs[v] = candidates[(*found.choice)[v - 1]];
    auto witness = packets_for(g, base_certs, delta);
    if (!run_all(reduce(base, delta), g, witness).accepted) {
      throw std::logic_error("payload witness failed re-validation");
    }
    outcome.witness = std::move(witness);
  }
  return outcome;
}

}  // namespace localcert
