#include "localcert/registry.hpp"

#include <charconv>
#include <optional>

#include "localcert/label_encoder.hpp"
#include "localcert/path_canonical.hpp"
#include "localcert/pdelta.hpp"
#include "localcert/radius_reduction.hpp"
#include "localcert/schemes.hpp"

namespace localcert {

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InputError("bad number '" + std::string(text) + "' in scheme name '" + std::string(whole) + "'");
  }
  return value;
}

// Splits off the first ':'-separated field.
std::pair<std::string_view, std::optional<std::string_view>> head(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return {s, std::nullopt};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto [first, rest] = head(s);
    out.push_back(first);
    if (!rest) return out;
    s = *rest;
  }
}

}  // namespace

Scheme make_scheme(std::string_view name) {
  const auto [kind, rest] = head(name);
  const auto need_rest = [&, rest = rest] {
    if (!rest || rest->empty()) throw InputError("scheme '" + std::string(name) + "' needs an argument");
    return *rest;
  };

  if (kind == "wrap-u") return wrap_unlabeled(make_scheme(need_rest()));
  if (kind == "wrap-l") return wrap_labeled(make_scheme(need_rest()));
  if (kind == "lift") return lift_weak(make_scheme(need_rest()));
  if (kind == "shave") return shave(make_scheme(need_rest()));
  if (kind == "reduce") {
    const auto [delta, inner] = head(need_rest());
    if (!inner) throw InputError("reduce needs reduce:DELTA:SCHEME");
    return reduce(make_scheme(*inner), parse_int(delta, name));
  }

  const auto args = rest ? fields(*rest) : std::vector<std::string_view>{};
  const auto arity = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw InputError("wrong number of arguments in scheme name '" + std::string(name) + "'");
    }
  };
  if (kind == "kcolor") {
    arity(1, 1);
    return scheme_k_colorability(parse_int(args[0], name));
  }
  if (kind == "tree-dist") {
    arity(0, 1);
    return scheme_tree_distances(args.empty() ? 1 : parse_int(args[0], name));
  }
  if (kind == "uniform-labels") {
    arity(1, 1);
    return scheme_uniform_labels(parse_int(args[0], name));
  }
  if (kind == "even-path") {
    arity(0, 0);
    return scheme_even_order_weak();
  }
  if (kind == "accept-all" || kind == "reject-all") {
    arity(0, 1);
    const int r = args.empty() ? 1 : parse_int(args[0], name);
    return kind == "accept-all" ? scheme_accept_all(r) : scheme_reject_all(r);
  }
  if (kind == "pdelta") {
    arity(2, 3);
    std::optional<std::size_t> cap;
    if (args.size() == 3) cap = static_cast<std::size_t>(parse_int(args[2], name));
    return scheme_pdelta(parse_int(args[0], name), parse_int(args[1], name), cap);
  }
  throw InputError("unknown scheme '" + std::string(name) + "'");
}

std::vector<SchemeEntry> list_schemes() {
  return {
      {"kcolor:K", "proper K-coloring, radius 1"},
      {"tree-dist[:R]", "spanning tree by root id and distance, radius R (default 1)"},
      {"uniform-labels:D", "all labels within distance D agree, no certificates"},
      {"even-path", "order is even; correct only under canonical identifiers"},
      {"accept-all[:R]", "accepts everything"},
      {"reject-all[:R]", "rejects everything"},
      {"pdelta:DELTA:R[:C]", "P_Delta at radius R; C caps certificates at C bits"},
      {"reduce:DELTA:SCHEME", "radius reduced by DELTA through neighbourhood packets"},
      {"wrap-u:SCHEME", "labeled SCHEME on encoded graphs g(G)"},
      {"wrap-l:SCHEME", "unlabeled SCHEME on g(G), run on the labeled graph"},
      {"lift:SCHEME", "SCHEME on paths with prover-supplied canonical identifiers"},
      {"shave:SCHEME", "radius-1 scheme on paths carrying a window of SCHEME certificates"},
  };
}

}  // namespace localcert
