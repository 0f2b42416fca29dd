#ifndef LOCALCERT_SCHEMES_HPP
#define LOCALCERT_SCHEMES_HPP

#include <optional>
#include <vector>

#include "localcert/certification.hpp"

namespace localcert {

/// Proper k-coloring; certificates are ceil(log2 k)-bit colors, radius 1.
Scheme scheme_k_colorability(int k);

/// Exact k-coloring by backtracking; nullopt if none exists. Colors are
/// indexed by vertex id (slot 0 unused).
std::optional<std::vector<int>> find_coloring(const Graph& g, int k);

/// Spanning-tree distances certifying "g is a tree". Certificate
/// [root - 1 : w][dist : w] with w = max(1, ceil(log2 n)).
/// With radius > 1 the verifier runs the radius-1 rule at every vertex whose
/// neighborhood it fully sees, which gives a genuinely r-local base scheme.
Scheme scheme_tree_distances(int radius = 1);

/// Width of each tree-distance certificate field for a host of order n.
int tree_distance_width(std::size_t n);

/// Accepts iff every label within distance d equals the center's label.
/// Certificates are empty; any non-empty certificate in view is rejected.
Scheme scheme_uniform_labels(int d);

/// Weak scheme for "n is even" on paths that assumes identifiers are the
/// canonical 1..n along the path: the vertex whose id equals n checks parity.
Scheme scheme_even_order_weak();

Scheme scheme_accept_all(int radius = 1);
Scheme scheme_reject_all(int radius = 1);

}  // namespace localcert

#endif  // LOCALCERT_SCHEMES_HPP
