#include "localcert/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace localcert {

using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

// Tokens of all non-comment lines.
std::istringstream tokens_of(const std::string& text) {
  std::ostringstream cleaned;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    cleaned << line.substr(0, line.find('#')) << '\n';
  }
  return std::istringstream(cleaned.str());
}

BitString bits_from_text(std::size_t length, const std::string& hex) {
  if (hex == "-") {
    if (length != 0) throw InputError("'-' stands for the empty string only");
    return {};
  }
  try {
    return BitString::from_hex(hex, length);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad bit string: ") + e.what());
  }
}

std::string bits_to_text(const BitString& bits) {
  return std::to_string(bits.size()) + " " + (bits.empty() ? std::string("-") : bits.to_hex());
}

VertexId vertex_from_key(const std::string& key, std::size_t n) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || v < 1 || v > n) throw InputError("bad vertex id '" + key + "'");
  return static_cast<VertexId>(v);
}

}  // namespace

json bits_to_json(const BitString& bits) { return json{{"bits", bits.size()}, {"hex", bits.to_hex()}}; }

BitString bits_from_json(const json& j) {
  try {
    return BitString::from_hex(j.at("hex").get<std::string>(), j.at("bits").get<std::size_t>());
  } catch (const json::exception& e) {
    throw InputError(std::string("bad bit string: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad bit string: ") + e.what());
  }
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json labels = json::object();
  for (VertexId v = 1; v <= g.order(); ++v) {
    if (!g.label(v).empty()) labels[std::to_string(v)] = bits_to_json(g.label(v));
  }
  return json{{"n", g.order()}, {"edges", edges}, {"labels", labels}};
}

Graph graph_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    std::vector<BitString> labels(n);
    if (j.contains("labels")) {
      for (const auto& [key, value] : j.at("labels").items()) labels[vertex_from_key(key, n) - 1] = bits_from_json(value);
    }
    return Graph(n, std::move(edges), std::move(labels));
  } catch (const json::exception& e) {
    throw InputError(std::string("bad graph document: ") + e.what());
  }
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (VertexId v = 1; v <= g.order(); ++v) {
    if (!g.label(v).empty()) out << v << ' ' << bits_to_text(g.label(v)) << '\n';
  }
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  auto in = tokens_of(text);
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw InputError("graph text needs an 'N M' header");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    VertexId u = 0;
    VertexId v = 0;
    if (!(in >> u >> v)) throw InputError("graph text ends before edge " + std::to_string(i + 1));
    edges.emplace_back(u, v);
  }
  std::vector<BitString> labels(n);
  std::string id;
  while (in >> id) {
    std::size_t length = 0;
    std::string hex;
    if (!(in >> length >> hex)) throw InputError("label line for vertex " + id + " is incomplete");
    labels[vertex_from_key(id, n) - 1] = bits_from_text(length, hex);
  }
  return Graph(n, std::move(edges), std::move(labels));
}

json certs_to_json(const CertificateAssignment& certs) {
  json out = json::object();
  for (VertexId v = 1; v <= certs.order(); ++v) out[std::to_string(v)] = bits_to_json(certs[v]);
  return json{{"n", certs.order()}, {"certs", out}};
}

CertificateAssignment certs_from_json(const json& j, std::size_t n) {
  try {
    if (j.contains("n") && j.at("n").get<std::size_t>() != n) {
      throw InputError("certificate file is for a different vertex count");
    }
    CertificateAssignment out(n);
    for (const auto& [key, value] : j.at("certs").items()) out[vertex_from_key(key, n)] = bits_from_json(value);
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad certificate document: ") + e.what());
  }
}

std::string certs_to_text(const CertificateAssignment& certs) {
  std::ostringstream out;
  out << certs.order() << '\n';
  for (VertexId v = 1; v <= certs.order(); ++v) out << v << ' ' << bits_to_text(certs[v]) << '\n';
  return out.str();
}

CertificateAssignment certs_from_text(const std::string& text, std::size_t n) {
  auto in = tokens_of(text);
  std::size_t declared = 0;
  if (!(in >> declared)) throw InputError("certificate text needs a vertex count");
  if (declared != n) throw InputError("certificate file is for a different vertex count");
  CertificateAssignment out(n);
  std::string id;
  while (in >> id) {
    std::size_t length = 0;
    std::string hex;
    if (!(in >> length >> hex)) throw InputError("certificate line for vertex " + id + " is incomplete");
    out[vertex_from_key(id, n)] = bits_from_text(length, hex);
  }
  return out;
}

Graph read_graph(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  if (!looks_like_json(text)) return graph_from_text(text);
  try {
    return graph_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  spill(path, path.extension() == ".json" ? graph_to_json(g).dump(2) + "\n" : graph_to_text(g));
}

CertificateAssignment read_certs(const std::filesystem::path& path, std::size_t n) {
  const std::string text = slurp(path);
  if (!looks_like_json(text)) return certs_from_text(text, n);
  try {
    return certs_from_json(json::parse(text), n);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_certs(const CertificateAssignment& certs, const std::filesystem::path& path) {
  spill(path, path.extension() == ".json" ? certs_to_json(certs).dump(2) + "\n" : certs_to_text(certs));
}

}  // namespace localcert
