#include "localcert/pdelta.hpp"

#include <algorithm>
#include <map>

#include "localcert/generators.hpp"

namespace localcert {

namespace {

struct ParsedLabel {
  int a = 0;
  std::optional<bool> b;
};

// Label of a non-root vertex: exactly w bits (internal) or w + 1 (leaf).
std::optional<ParsedLabel> parse_label(const BitString& label, int delta, bool leaf) {
  const int w = pdelta_order_bits(delta);
  if (label.size() != static_cast<std::size_t>(w + (leaf ? 1 : 0))) return std::nullopt;
  BitReader in(label);
  const auto a = in.read_fixed(w);
  if (!a || *a < 1 || *a > static_cast<std::uint64_t>(delta - 1)) return std::nullopt;
  ParsedLabel out{static_cast<int>(*a), {}};
  if (leaf) out.b = *in.read_bit();
  return out;
}

// Accepts either label form; used where a vertex's role is not yet known.
std::optional<int> label_order(const BitString& label, int delta) {
  if (auto p = parse_label(label, delta, false)) return p->a;
  if (auto p = parse_label(label, delta, true)) return p->a;
  return std::nullopt;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Height k with |S| = (delta - 1)^k, if the length is such a power.
std::optional<int> payload_height(std::size_t length, int delta) {
  std::size_t p = 1;
  for (int k = 0; p <= length; ++k, p *= static_cast<std::size_t>(delta - 1)) {
    if (p == length) return k;
  }
  return std::nullopt;
}

BitString capped(const BitString& s, std::optional<std::size_t> cap) {
  return cap && s.size() > *cap ? s.prefix(*cap) : s;
}

// Payload rule at a vertex with a non-empty certificate.
bool check_payload_vertex(const LocalView& view, int delta, std::optional<std::size_t> cap) {
  const VertexId v = view.center();
  const BitString& own = view.cert(v);
  const auto nbrs = view.neighbors(v);
  const std::size_t up_factor = static_cast<std::size_t>(delta - 1);

  if (nbrs.size() == 1) {
    const auto label = parse_label(view.label(v), delta, true);
    if (!label || own != BitString::from_binary(*label->b ? "1" : "0")) return false;
    if (cap) return true;
    const BitString& up = view.cert(nbrs[0]);
    return up.empty() || up.size() == up_factor;
  }
  if (nbrs.size() != static_cast<std::size_t>(delta)) return false;
  if (!parse_label(view.label(v), delta, false)) return false;

  const auto children_match = [&](const std::vector<VertexId>& children) {
    std::map<int, const BitString*> by_order;
    for (VertexId c : children) {
      const auto a = label_order(view.label(c), delta);
      if (!a || !by_order.emplace(*a, &view.cert(c)).second) return false;
    }
    BitString joined;
    for (const auto& [a, payload] : by_order) joined.append(*payload);
    return capped(joined, cap) == own;
  };

  if (cap) {
    if (own.size() > *cap) return false;
    for (VertexId up : nbrs) {
      std::vector<VertexId> children;
      bool usable = true;
      for (VertexId c : nbrs) {
        if (c == up) continue;
        usable = usable && !view.cert(c).empty();
        children.push_back(c);
      }
      if (usable && children_match(children)) return true;
    }
    return false;
  }

  const auto height = payload_height(own.size(), delta);
  if (!height || *height < 1) return false;
  const std::size_t child_len = own.size() / up_factor;
  std::vector<VertexId> children;
  std::vector<VertexId> ups;
  for (VertexId u : nbrs) {
    (view.cert(u).size() == child_len ? children : ups).push_back(u);
  }
  if (ups.size() != 1) return false;
  const BitString& up = view.cert(ups[0]);
  if (!up.empty() && up.size() != own.size() * up_factor) return false;
  if (child_len == 1) {
    for (VertexId c : children) {
      if (!parse_label(view.label(c), delta, true)) return false;
    }
  }
  return children_match(children);
}

// Checks run by a degree-2 vertex with an empty certificate: the whole ball
// of radius r is the top of a P_Delta tree and the frontier spells XX.
bool check_root_vertex(const LocalView& view, int delta) {
  const VertexId root = view.center();
  const int r = view.radius();
  if (!view.label(root).empty()) return false;

  std::map<VertexId, VertexId> parent;
  std::optional<int> leaf_level;
  int deepest = 0;
  for (const auto& vx : view.vertices()) {
    deepest = std::max(deepest, vx.dist);
    std::size_t up = 0;
    for (VertexId u : vx.neighbors) {
      const int du = view.dist(u);
      if (du == vx.dist) return false;
      if (du + 1 == vx.dist) {
        ++up;
        parent[vx.id] = u;
      }
    }
    if (vx.id != root && up != 1) return false;
    if (vx.dist >= r) continue;

    // Interior of the ball: degree and label are fully visible.
    if (vx.id != root) {
      if (!vx.cert.empty()) return false;
      const bool leaf = vx.neighbors.size() == 1;
      if (!leaf && vx.neighbors.size() != static_cast<std::size_t>(delta)) return false;
      if (!parse_label(vx.label, delta, leaf)) return false;
      if (leaf) {
        if (leaf_level && *leaf_level != vx.dist) return false;
        leaf_level = vx.dist;
      }
    }
    std::vector<int> orders;
    for (VertexId u : vx.neighbors) {
      if (view.dist(u) != vx.dist + 1) continue;
      const auto a = label_order(view.label(u), delta);
      if (!a) return false;
      orders.push_back(*a);
    }
    std::sort(orders.begin(), orders.end());
    if (std::adjacent_find(orders.begin(), orders.end()) != orders.end()) return false;
  }

  // Frontier: the leaves when they lie strictly inside the ball, otherwise
  // the vertices at distance exactly r.
  const int frontier_level = leaf_level.value_or(r);
  if (leaf_level && deepest > *leaf_level) return false;
  std::vector<std::pair<std::vector<int>, BitString>> entries;
  for (const auto& vx : view.vertices()) {
    if (vx.dist != frontier_level) continue;
    if (leaf_level && vx.neighbors.size() != 1) return false;
    BitString value;
    if (leaf_level) {
      value.push_back(*parse_label(vx.label, delta, true)->b);
    } else {
      value = vx.cert;
      if (value.empty()) return false;
    }
    std::vector<int> path;
    for (VertexId u = vx.id; u != root; u = parent.at(u)) {
      path.push_back(*label_order(view.label(u), delta));
    }
    std::reverse(path.begin(), path.end());
    entries.emplace_back(std::move(path), std::move(value));
  }
  if (entries.empty()) return false;
  std::sort(entries.begin(), entries.end());
  const int left_order = entries.front().first.front();
  std::vector<const BitString*> left;
  std::vector<const BitString*> right;
  for (const auto& [path, value] : entries) {
    (path.front() == left_order ? left : right).push_back(&value);
    if (value.size() != entries.front().second.size()) return false;
  }
  if (left.size() != right.size()) return false;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (*left[i] != *right[i]) return false;
  }
  return true;
}

}  // namespace

int pdelta_order_bits(int delta) { return bit_width_for(static_cast<std::uint64_t>(delta - 1)); }

std::size_t pdelta_half_leaves(int delta, int depth) {
  return ipow(static_cast<std::size_t>(delta - 1), depth - 1);
}

std::size_t pdelta_order(int delta, int depth) {
  std::size_t per_half = 0;
  for (int k = 0; k < depth; ++k) per_half += ipow(static_cast<std::size_t>(delta - 1), k);
  return 1 + 2 * per_half;
}

BitString pdelta_label(int delta, int a, std::optional<bool> leaf_bit) {
  BitWriter out;
  out.write_fixed(static_cast<std::uint64_t>(a), pdelta_order_bits(delta));
  if (leaf_bit) out.write_bit(*leaf_bit);
  return std::move(out).take();
}

PDeltaInstance p_delta_instance(int delta, int depth, const BitString& half,
                                std::optional<std::uint64_t> perm_seed) {
  if (delta < 3) throw InputError("P_Delta needs Delta >= 3");
  if (depth < 1 || depth > 20) throw InputError("P_Delta depth must be in 1..20");
  const std::size_t leaves = pdelta_half_leaves(delta, depth);
  if (half.size() != leaves) {
    throw InputError("half string must have " + std::to_string(leaves) + " bits for Delta=" +
                     std::to_string(delta) + ", depth=" + std::to_string(depth));
  }
  const std::size_t n = pdelta_order(delta, depth);
  PDeltaInstance inst;
  inst.delta = delta;
  inst.depth = depth;
  inst.half = half;
  inst.parent.assign(n + 1, 0);
  inst.order.assign(n + 1, 0);
  inst.level.assign(n + 1, 0);
  std::vector<Edge> edges;
  std::vector<BitString> labels(n);

  VertexId next = 1;
  std::size_t leaf_cursor = 0;
  const auto build = [&](auto&& self, VertexId parent, int a, int lvl) -> VertexId {
    const VertexId v = next++;
    inst.parent[v] = parent;
    inst.order[v] = a;
    inst.level[v] = lvl;
    if (parent != 0) edges.emplace_back(parent, v);
    if (lvl == depth) {
      labels[v - 1] = pdelta_label(delta, a, half[leaf_cursor++ % leaves]);
    } else {
      labels[v - 1] = pdelta_label(delta, a);
      for (int c = 1; c < delta; ++c) self(self, v, c, lvl + 1);
    }
    return v;
  };
  inst.root = next++;
  inst.left = build(build, inst.root, 1, 1);
  inst.right = build(build, inst.root, 2, 1);
  inst.graph = Graph(n, std::move(edges), std::move(labels));

  if (perm_seed) {
    const auto perm = random_permutation(n, *perm_seed);
    inst.graph = inst.graph.relabeled(perm);
    const auto remap = [&](VertexId v) { return v == 0 ? VertexId{0} : perm[v - 1]; };
    std::vector<VertexId> parent(n + 1, 0);
    std::vector<int> order(n + 1, 0);
    std::vector<int> level(n + 1, 0);
    for (VertexId v = 1; v <= n; ++v) {
      parent[perm[v - 1]] = remap(inst.parent[v]);
      order[perm[v - 1]] = inst.order[v];
      level[perm[v - 1]] = inst.level[v];
    }
    inst.parent = std::move(parent);
    inst.order = std::move(order);
    inst.level = std::move(level);
    inst.root = remap(inst.root);
    inst.left = remap(inst.left);
    inst.right = remap(inst.right);
  }
  return inst;
}

MembershipResult pdelta_membership(const Graph& g, int delta) {
  if (delta < 3) throw InputError("P_Delta needs Delta >= 3");
  MembershipResult result;
  const auto fail = [&](std::string why) {
    result.member = false;
    result.diagnostic = std::move(why);
    return result;
  };
  const std::size_t n = g.order();

  std::vector<VertexId> degree_two;
  for (VertexId v = 1; v <= n; ++v) {
    if (g.degree(v) == 2) degree_two.push_back(v);
  }
  if (degree_two.size() != 1) {
    return fail("Property 1: expected exactly one vertex of degree 2, found " +
                std::to_string(degree_two.size()));
  }
  if (g.size() + 1 != n) return fail("Property 1: graph is not a tree");

  PDeltaShape shape;
  shape.root = degree_two.front();
  shape.parent.assign(n + 1, 0);
  shape.order.assign(n + 1, 0);
  shape.children.assign(n + 1, {});
  shape.subtree_string.assign(n + 1, {});
  shape.level = bfs_distances(g, shape.root);
  std::optional<int> leaf_level;
  for (VertexId v = 1; v <= n; ++v) {
    for (VertexId u : g.neighbors(v)) {
      if (shape.level[u] + 1 == shape.level[v]) shape.parent[v] = u;
      if (shape.level[u] == shape.level[v] + 1) shape.children[v].push_back(u);
    }
    if (v == shape.root) continue;
    const std::size_t deg = g.degree(v);
    if (deg == 1) {
      if (leaf_level && *leaf_level != shape.level[v]) {
        return fail("Property 1: leaves at different depths (vertex " + std::to_string(v) + ")");
      }
      leaf_level = shape.level[v];
    } else if (deg != static_cast<std::size_t>(delta)) {
      return fail("Property 1: vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
    }
  }
  shape.depth = *leaf_level;

  if (!g.label(shape.root).empty()) return fail("Property 2: root label is not empty");
  for (VertexId v = 1; v <= n; ++v) {
    if (v == shape.root) continue;
    const auto label = parse_label(g.label(v), delta, g.degree(v) == 1);
    if (!label) return fail("Property 2: malformed label at vertex " + std::to_string(v));
    shape.order[v] = label->a;
  }
  for (VertexId v = 1; v <= n; ++v) {
    auto& kids = shape.children[v];
    std::sort(kids.begin(), kids.end(),
              [&](VertexId x, VertexId y) { return shape.order[x] < shape.order[y]; });
    for (std::size_t i = 1; i < kids.size(); ++i) {
      if (shape.order[kids[i]] == shape.order[kids[i - 1]]) {
        return fail("Property 2: siblings under vertex " + std::to_string(v) + " share order " +
                    std::to_string(shape.order[kids[i]]));
      }
    }
  }

  // S(v) bottom-up: process vertices by decreasing level.
  std::vector<VertexId> by_level(n);
  for (VertexId v = 1; v <= n; ++v) by_level[v - 1] = v;
  std::sort(by_level.begin(), by_level.end(),
            [&](VertexId x, VertexId y) { return shape.level[x] > shape.level[y]; });
  for (VertexId v : by_level) {
    if (shape.children[v].empty()) {
      shape.subtree_string[v].push_back(g.label(v)[g.label(v).size() - 1]);
    } else {
      for (VertexId c : shape.children[v]) shape.subtree_string[v].append(shape.subtree_string[c]);
    }
  }
  result.shape = shape;

  const BitString s = shape.leaf_string();
  const std::size_t half = s.size() / 2;
  if (s.substr(0, half) != s.substr(half, half)) {
    return fail("Property 3: leaf string " + s.to_binary() + " is not of the form XX");
  }
  result.member = true;
  return result;
}

CertificateAssignment pdelta_certificates(const PDeltaShape& shape, int r,
                                          std::optional<std::size_t> cap) {
  const std::size_t n = shape.parent.size() - 1;
  CertificateAssignment certs(n);
  for (VertexId v = 1; v <= n; ++v) {
    if (shape.level[v] >= r) certs[v] = capped(shape.subtree_string[v], cap);
  }
  return certs;
}

Scheme scheme_pdelta(int delta, int r, std::optional<std::size_t> cap) {
  if (delta < 3) throw InputError("P_Delta needs Delta >= 3");
  if (r < 1) throw InputError("P_Delta scheme radius must be at least 1");
  if (cap && *cap < 1) throw InputError("P_Delta truncation must keep at least one bit");
  Scheme s;
  s.name = "pdelta:" + std::to_string(delta) + ":" + std::to_string(r) +
           (cap ? ":" + std::to_string(*cap) : "");
  s.radius = r;
  s.prover = [delta, r, cap](const Graph& g) {
    const auto m = pdelta_membership(g, delta);
    if (!m.member) throw ContractViolation("not in P_Delta: " + m.diagnostic);
    return pdelta_certificates(*m.shape, r, cap);
  };
  s.verifier = [delta, r, cap](const LocalView& view) {
    const VertexId v = view.center();
    const std::size_t deg = view.degree(v);
    if (deg == 2) return view.cert(v).empty() && check_root_vertex(view, delta);
    if (!view.cert(v).empty()) return check_payload_vertex(view, delta, cap);
    for (const auto& vx : view.vertices()) {
      if (vx.dist <= r - 1 && vx.neighbors.size() == 2) return true;
    }
    return false;
  };
  return s;
}

}  // namespace localcert
