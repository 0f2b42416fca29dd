#include "localcert/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "localcert/pdelta.hpp"

namespace localcert {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_number(const std::string& token, std::string_view spec) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit)) {
    throw InputError("bad number '" + token + "' in generator spec '" + std::string(spec) + "'");
  }
  return std::stoull(token);
}

}  // namespace

Graph path_graph(std::size_t n) {
  if (n == 0) throw InputError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, static_cast<VertexId>(n));
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t n) {
  if (n == 0) throw InputError("star needs at least one vertex");
  std::vector<Edge> edges;
  for (VertexId v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw InputError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

std::vector<VertexId> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{1});
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph random_tree(std::size_t n, std::uint64_t seed, std::size_t max_degree) {
  if (n == 0) throw InputError("tree needs at least one vertex");
  if (max_degree == 1 && n > 2) throw InputError("no tree on more than 2 vertices has max degree 1");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> degree(n + 1, 0);
  std::vector<Edge> edges;
  for (VertexId v = 2; v <= n; ++v) {
    std::vector<VertexId> open;
    for (VertexId u = 1; u < v; ++u) {
      if (max_degree == 0 || degree[u] < max_degree) open.push_back(u);
    }
    const VertexId u = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  }
  return Graph(n, std::move(edges)).relabeled(random_permutation(n, rng()));
}

Graph random_bounded_degree(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  if (n == 0) throw InputError("graph needs at least one vertex");
  if (max_degree == 0 && n > 1) throw InputError("max degree 0 only allows a single vertex");
  if (max_degree == 1 && n > 2) throw InputError("max degree 1 only allows up to 2 vertices");
  std::mt19937_64 rng(seed);
  const Graph tree = random_tree(n, rng(), max_degree);
  std::set<Edge> edges(tree.edges().begin(), tree.edges().end());
  std::vector<std::size_t> degree(n + 1, 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  std::uniform_int_distribution<VertexId> pick(1, static_cast<VertexId>(n));
  for (std::size_t attempt = 0; attempt < n; ++attempt) {
    VertexId u = pick(rng);
    VertexId v = pick(rng);
    if (u == v || degree[u] >= max_degree || degree[v] >= max_degree) continue;
    if (u > v) std::swap(u, v);
    if (edges.insert({u, v}).second) {
      ++degree[u];
      ++degree[v];
    }
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph with_random_labels(const Graph& g, std::size_t max_bits, std::uint64_t seed, bool exact) {
  std::mt19937_64 rng(seed);
  std::vector<BitString> labels(g.order());
  for (auto& label : labels) {
    const std::size_t len =
        exact ? max_bits : std::uniform_int_distribution<std::size_t>(0, max_bits)(rng);
    for (std::size_t i = 0; i < len; ++i) label.push_back(rng() & 1);
  }
  return g.with_labels(std::move(labels));
}

Graph generate(std::string_view spec, std::uint64_t default_seed) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  const auto arg = [&](std::size_t i) { return parse_number(parts.at(i), spec); };
  const auto seed_at = [&](std::size_t i) {
    return parts.size() > i ? arg(i) : default_seed;
  };
  try {
    if (kind == "path" && parts.size() == 2) return path_graph(arg(1));
    if (kind == "cycle" && parts.size() == 2) return cycle_graph(arg(1));
    if (kind == "star" && parts.size() == 2) return star_graph(arg(1));
    if (kind == "complete" && parts.size() == 2) return complete_graph(arg(1));
    if (kind == "tree" && (parts.size() == 2 || parts.size() == 3)) {
      return random_tree(arg(1), seed_at(2));
    }
    if (kind == "random" && (parts.size() == 3 || parts.size() == 4)) {
      return random_bounded_degree(arg(1), arg(2), seed_at(3));
    }
    if (kind == "pdelta" && (parts.size() == 4 || parts.size() == 5)) {
      const BitString half = BitString::from_binary(parts[3]);
      std::optional<std::uint64_t> perm;
      if (parts.size() == 5) perm = arg(4);
      return p_delta_instance(static_cast<int>(arg(1)), static_cast<int>(arg(2)), half, perm).graph;
    }
  } catch (const std::out_of_range&) {
  } catch (const std::invalid_argument& e) {
    throw InputError("bad generator spec '" + std::string(spec) + "': " + e.what());
  }
  throw InputError("unknown generator spec '" + std::string(spec) + "'");
}

}  // namespace localcert
