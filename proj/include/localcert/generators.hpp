#ifndef LOCALCERT_GENERATORS_HPP
#define LOCALCERT_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "localcert/graph.hpp"

namespace localcert {

inline constexpr std::uint64_t kDefaultSeed = 20240501;

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Vertex 1 is the center, 2..n the leaves.
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);

/// Uniform random permutation of 1..n (as used by Graph::relabeled).
std::vector<VertexId> random_permutation(std::size_t n, std::uint64_t seed);

/// Random tree on n vertices with identifiers shuffled. max_degree = 0 means
/// unbounded.
Graph random_tree(std::size_t n, std::uint64_t seed, std::size_t max_degree = 0);

/// Connected graph with maximum degree at most `max_degree`: a random
/// spanning tree plus extra random edges, identifiers shuffled.
Graph random_bounded_degree(std::size_t n, std::size_t max_degree, std::uint64_t seed);

/// Replaces every label by a random string of length 0..max_bits (exactly
/// max_bits when `exact` is set).
Graph with_random_labels(const Graph& g, std::size_t max_bits, std::uint64_t seed,
                         bool exact = false);

/// Textual generator spec:
///   path:N  cycle:N  star:N  complete:N  tree:N[:SEED]
///   random:N:MAXDEG[:SEED]  pdelta:DELTA:DEPTH:X[:SEED]
/// X is a string of '0'/'1'. Throws InputError on anything infeasible.
Graph generate(std::string_view spec, std::uint64_t default_seed = kDefaultSeed);

}  // namespace localcert

#endif  // LOCALCERT_GENERATORS_HPP
