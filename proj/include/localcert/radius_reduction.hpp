#ifndef LOCALCERT_RADIUS_REDUCTION_HPP
#define LOCALCERT_RADIUS_REDUCTION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localcert/certification.hpp"
#include "localcert/packet.hpp"

namespace localcert {

/// Radius-reduction: every vertex u carries one packet per x in ball(u, delta),
/// so that a verifier of radius r - delta can rebuild the radius-r view of the
/// base scheme. Requires 0 < delta < base.radius. `max_degree`, when given,
/// is a promise on the input class: the prover refuses larger degrees and the
/// verifier rejects at vertices exceeding it.
Scheme reduce(const Scheme& base, int delta, std::optional<std::size_t> max_degree = {});

/// Honest packets {(N(x), L(x), f(g)(x), x, d(u, x)) : x in ball(u, delta)}.
CertificateAssignment reduced_prover(const Scheme& base, int delta, const Graph& g);

/// Same packet layout built around an arbitrary base assignment.
CertificateAssignment packets_for(const Graph& g, const CertificateAssignment& base_certs,
                                  int delta);

/// Outcome of the reduced verifier at one vertex. `failed` names the first
/// violated condition: "B1" (duplicate origin), "B2" (self packet), "B3"
/// (distance is not 1 + min over neighbors), "B4" (propagation), "B5"
/// (copy consistency), "adjacency" (rebuilt adjacency is asymmetric or has a
/// self-loop), "B6" (base verifier rejects), "degree" (max_degree promise).
struct ReducedVerdict {
  bool accepted = false;
  std::string failed;
};

ReducedVerdict reduced_verifier(const LocalView& view, int delta, const Scheme& base,
                                std::optional<std::size_t> max_degree = {});

/// The base-scheme view of radius `radius` around the center rebuilt from all
/// packets visible in `view`. For each origin the packet held closest to the
/// center (ties: smallest holder id) supplies D, L and C. nullopt when the
/// rebuilt adjacency is asymmetric or contains a self-loop.
std::optional<LocalView> reconstruct_view(const LocalView& view, int delta, int radius);

/// |ball(v, delta)| bound for maximum degree Delta: (Delta(Delta-1)^delta - 2)/(Delta-2)
/// for Delta >= 3, 2 delta + 1 for Delta = 2 (Delta < 2 is treated as 2).
std::uint64_t packet_count_bound(std::size_t max_degree, int delta);

/// Worst-case bits of one encoded packet:
/// Delta*w + w + dbits + s + l + gamma(Delta) + gamma(l) + gamma(s), w = ceil(log2(n+1)).
std::uint64_t per_packet_bits(std::size_t max_degree, std::size_t n, int delta,
                              std::size_t base_bits, std::size_t label_bits);

/// packet_count_bound * per_packet_bits + gamma(packet_count_bound).
std::uint64_t size_bound(std::size_t max_degree, int delta, std::size_t n, std::size_t base_bits,
                         std::size_t label_bits);

/// Global consequences of acceptance everywhere, checked against the host.
struct LemmaReport {
  bool distances = true;      // every packet's d equals the true distance
  bool membership = true;     // has(P, u, x) iff u in ball(x, delta)
  bool agreement = true;      // packets sharing an origin carry equal D, L, C
  bool well_formed = true;    // D = N(origin) and L = label(origin)
  bool coverage = true;       // ball(u, r) is inside the visible origins
  std::vector<std::string> violations;

  bool all() const noexcept {
    return distances && membership && agreement && well_formed && coverage;
  }
};

LemmaReport check_lemmas(const Graph& g, const CertificateAssignment& certs, int delta,
                         int base_radius);

/// For honest certificates: the rebuilt radius-r view equals induced_view of
/// the base prover's assignment at every vertex. Returns the first vertex
/// where they differ.
std::optional<VertexId> reconstruction_mismatch(const Scheme& base, int delta, const Graph& g);

/// Adversary that keeps the packet framing honest and enumerates the base
/// certificates carried inside: every vertex x picks C(x) from `candidates`,
/// the packets are built with packets_for, and the real reduced verifier is
/// run. Pruning follows ball(v, base.radius), the part of the assignment the
/// verifier at v can depend on.
SoundnessOutcome payload_soundness_search(const Scheme& base, int delta, const Graph& g,
                                          const std::vector<BitString>& candidates,
                                          const SearchLimits& limits = {});

}  // namespace localcert

#endif  // LOCALCERT_RADIUS_REDUCTION_HPP
