#ifndef LOCALCERT_CERTIFICATION_HPP
#define LOCALCERT_CERTIFICATION_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "localcert/certificate_assignment.hpp"
#include "localcert/graph.hpp"

namespace localcert {

using Prover = std::function<CertificateAssignment(const Graph&)>;
/// Receives only the radius-r view, so r-locality holds by construction.
/// Must be pure: same view, same answer.
using Verifier = std::function<bool(const LocalView&)>;

/// A proof labeling scheme (f, A) with verification radius r.
struct Scheme {
  std::string name;
  int radius = 1;
  Prover prover;
  Verifier verifier;
};

struct Verdict {
  bool accepted = true;
  std::vector<VertexId> rejecting_vertices;  // ascending
};

/// Runs the verifier at every vertex on its radius-r view. `jobs` > 1 splits
/// the vertices across threads; the result does not depend on it.
Verdict run_all(const Scheme& scheme, const Graph& g, const CertificateAssignment& certs,
                int jobs = 1);

/// True iff the verifier accepts everywhere; stops at the first rejection.
bool accepts_everywhere(const Scheme& scheme, const Graph& g,
                        const CertificateAssignment& certs);

struct CompletenessFailure {
  std::size_t instance = 0;
  std::string reason;  // prover error, or rejection summary
  std::optional<VertexId> vertex;
  std::optional<LocalView> view;
};

struct CompletenessReport {
  std::size_t instances = 0;
  std::vector<CompletenessFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

CompletenessReport check_completeness(const Scheme& scheme, const std::vector<Graph>& yes_instances,
                                      int jobs = 1);

struct SearchLimits {
  /// Maximum number of verifier invocations.
  std::uint64_t max_evaluations = 50'000'000;
  std::optional<std::chrono::steady_clock::duration> time_limit;
};

struct SoundnessOutcome {
  enum class Kind { kSound, kFooled, kBudgetExceeded };
  Kind kind = Kind::kSound;
  int max_bits = 0;
  /// Present iff kind == kFooled; re-validated with run_all before returning.
  std::optional<CertificateAssignment> witness;
  /// Total size of the enumeration space, saturating at UINT64_MAX.
  std::uint64_t space_size = 0;
  /// For kBudgetExceeded: lexicographic index of the next unexplored
  /// assignment; for the other kinds the space size.
  std::uint64_t stopped_at = 0;
  std::uint64_t evaluations = 0;
};

std::string to_string(SoundnessOutcome::Kind kind);

/// Exhaustive search for an assignment, with every vertex ranging over all
/// bit strings of length 0..max_bits, that the verifier accepts everywhere.
/// Enumeration is lexicographic in (P(1), ..., P(n)); a subtree is skipped
/// as soon as some vertex whose whole ball is assigned rejects, which never
/// hides an accepted assignment. The returned witness is therefore the
/// first accepted assignment in enumeration order.
SoundnessOutcome soundness_search(const Scheme& scheme, const Graph& no_instance, int max_bits,
                                  const SearchLimits& limits = {});

/// Generic engine behind soundness_search: vertex v picks one of
/// candidates[v - 1]; `check(v, choice)` is the acceptance test of vertex v
/// and may only be called once every vertex in depends_on[v - 1] is chosen.
struct AssignmentSearch {
  std::size_t n = 0;
  std::vector<std::size_t> candidate_counts;          // per vertex
  std::vector<std::vector<VertexId>> depends_on;      // per checked vertex
  std::function<bool(VertexId, const std::vector<std::size_t>&)> check;
  /// Optional: sees every accepted assignment; returning true resumes the
  /// search, so an exhausted run ends as kSound.
  std::function<bool(const std::vector<std::size_t>&)> on_found;
};

struct AssignmentSearchResult {
  SoundnessOutcome::Kind kind = SoundnessOutcome::Kind::kSound;
  std::optional<std::vector<std::size_t>> choice;
  std::uint64_t space_size = 0;
  std::uint64_t stopped_at = 0;
  std::uint64_t evaluations = 0;
};

AssignmentSearchResult search_accepting_assignment(const AssignmentSearch& search,
                                                   const SearchLimits& limits);

}  // namespace localcert

#endif  // LOCALCERT_CERTIFICATION_HPP
