#include "localcert/certification.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace localcert {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > kSaturated - b) ? kSaturated : a + b;
}

bool verify_at(const Scheme& scheme, const Graph& g, const CertificateAssignment& certs,
               VertexId v) {
  return scheme.verifier(induced_view(g, certs, v, scheme.radius));
}

}  // namespace

Verdict run_all(const Scheme& scheme, const Graph& g, const CertificateAssignment& certs,
                int jobs) {
  if (certs.order() != g.order()) {
    throw InputError("certificate assignment is not total on the graph");
  }
  const std::size_t n = g.order();
  std::vector<char> rejected(n + 1, 0);
  const auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      rejected[v] = verify_at(scheme, g, certs, static_cast<VertexId>(v)) ? 0 : 1;
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, n);
  if (threads == 1) {
    worker(1, n + 1);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = 1 + t * chunk;
      const std::size_t end = std::min(n + 1, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
  }
  Verdict verdict;
  for (VertexId v = 1; v <= n; ++v) {
    if (rejected[v]) verdict.rejecting_vertices.push_back(v);
  }
  verdict.accepted = verdict.rejecting_vertices.empty();
  return verdict;
}

bool accepts_everywhere(const Scheme& scheme, const Graph& g,
                        const CertificateAssignment& certs) {
  for (VertexId v = 1; v <= g.order(); ++v) {
    if (!verify_at(scheme, g, certs, v)) return false;
  }
  return true;
}

CompletenessReport check_completeness(const Scheme& scheme, const std::vector<Graph>& yes_instances,
                                      int jobs) {
  CompletenessReport report;
  report.instances = yes_instances.size();
  for (std::size_t i = 0; i < yes_instances.size(); ++i) {
    const Graph& g = yes_instances[i];
    CertificateAssignment certs;
    try {
      certs = scheme.prover(g);
    } catch (const std::exception& e) {
      report.failures.push_back({i, std::string("prover failed: ") + e.what(), {}, {}});
      continue;
    }
    const Verdict verdict = run_all(scheme, g, certs, jobs);
    if (!verdict.accepted) {
      const VertexId v = verdict.rejecting_vertices.front();
      report.failures.push_back({i,
                                 "rejected at " + std::to_string(verdict.rejecting_vertices.size()) +
                                     " vertex(es)",
                                 v, induced_view(g, certs, v, scheme.radius)});
    }
  }
  return report;
}

std::string to_string(SoundnessOutcome::Kind kind) {
  switch (kind) {
    case SoundnessOutcome::Kind::kSound:
      return "sound";
    case SoundnessOutcome::Kind::kFooled:
      return "fooled";
    case SoundnessOutcome::Kind::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

AssignmentSearchResult search_accepting_assignment(const AssignmentSearch& search,
                                                   const SearchLimits& limits) {
  const std::size_t n = search.n;
  AssignmentSearchResult result;
  if (search.candidate_counts.size() != n || search.depends_on.size() != n) {
    throw InputError("assignment search is not sized to the vertex count");
  }

  // suffix[i] = number of assignments of vertices i+1..n (0-based i).
  std::vector<std::uint64_t> suffix(n + 1, 1);
  for (std::size_t i = n; i-- > 0;) suffix[i] = sat_mul(suffix[i + 1], search.candidate_counts[i]);
  result.space_size = suffix[0];
  if (result.space_size == 0) {
    result.stopped_at = 0;
    return result;
  }

  // A vertex is checked right after the largest vertex it depends on is chosen.
  std::vector<std::vector<VertexId>> triggered(n);
  for (VertexId v = 1; v <= n; ++v) {
    const auto& deps = search.depends_on[v - 1];
    VertexId last = v;
    for (VertexId d : deps) last = std::max(last, d);
    triggered[last - 1].push_back(v);
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::size_t> choice(n, 0);
  std::size_t level = 0;
  std::uint64_t evaluations = 0;

  const auto index_of_prefix = [&](std::size_t upto) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i <= upto && i < n; ++i) idx = sat_add(idx, sat_mul(choice[i], suffix[i + 1]));
    return idx;
  };
  const auto out_of_budget = [&] {
    if (evaluations >= limits.max_evaluations) return true;
    if (limits.time_limit && (evaluations & 0xFF) == 0 &&
        std::chrono::steady_clock::now() - start > *limits.time_limit) {
      return true;
    }
    return false;
  };

  while (true) {
    // Try current choice at `level`.
    bool ok = true;
    for (VertexId v : triggered[level]) {
      if (out_of_budget()) {
        result.kind = SoundnessOutcome::Kind::kBudgetExceeded;
        result.stopped_at = index_of_prefix(level);
        result.evaluations = evaluations;
        return result;
      }
      ++evaluations;
      if (!search.check(v, choice)) {
        ok = false;
        break;
      }
    }
    if (ok && level + 1 == n && search.on_found && search.on_found(choice)) {
      ok = false;
    } else if (ok && level + 1 == n) {
      result.kind = SoundnessOutcome::Kind::kFooled;
      result.choice = choice;
      result.stopped_at = index_of_prefix(level);
      result.evaluations = evaluations;
      return result;
    }
    if (ok) {
      ++level;
      choice[level] = 0;
      continue;
    }
    // Advance to the next candidate, backtracking over exhausted levels.
    while (true) {
      if (++choice[level] < search.candidate_counts[level]) break;
      if (level == 0) {
        result.kind = SoundnessOutcome::Kind::kSound;
        result.stopped_at = result.space_size;
        result.evaluations = evaluations;
        return result;
      }
      --level;
    }
  }
}

SoundnessOutcome soundness_search(const Scheme& scheme, const Graph& g, int max_bits,
                                  const SearchLimits& limits) {
  const std::size_t n = g.order();
  const auto candidates = enumerate_bitstrings(max_bits);

  // One skeleton view per vertex; certificates are swapped in per check.
  std::vector<LocalView> skeletons;
  skeletons.reserve(n);
  const CertificateAssignment blank(n);
  AssignmentSearch search;
  search.n = n;
  search.candidate_counts.assign(n, candidates.size());
  for (VertexId v = 1; v <= n; ++v) {
    skeletons.push_back(induced_view(g, blank, v, scheme.radius));
    std::vector<VertexId> deps;
    for (const auto& vx : skeletons.back().vertices()) deps.push_back(vx.id);
    search.depends_on.push_back(std::move(deps));
  }
  search.check = [&](VertexId v, const std::vector<std::size_t>& choice) {
    const LocalView& skeleton = skeletons[v - 1];
    std::vector<BitString> certs;
    certs.reserve(skeleton.vertex_count());
    for (const auto& vx : skeleton.vertices()) certs.push_back(candidates[choice[vx.id - 1]]);
    return scheme.verifier(skeleton.with_certs(certs));
  };

  const auto found = search_accepting_assignment(search, limits);
  SoundnessOutcome outcome;
  outcome.kind = found.kind;
  outcome.max_bits = max_bits;
  outcome.space_size = found.space_size;
  outcome.stopped_at = found.stopped_at;
  outcome.evaluations = found.evaluations;
  if (found.choice) {
    CertificateAssignment witness(n);
    for (VertexId v = 1; v <= n; ++v) witness[v] = candidates[(*found.choice)[v - 1]];
    if (!run_all(scheme, g, witness).accepted) {
      throw std::logic_error("soundness witness failed re-validation");
    }
    outcome.witness = std::move(witness);
  }
  return outcome;
}

}  // namespace localcert
