#ifndef LOCALCERT_GRAPH_IO_HPP
#define LOCALCERT_GRAPH_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "localcert/graph.hpp"

namespace localcert {

// Two formats, chosen by content on read and by extension (.json) on write.
//
// JSON:  {"n": N, "edges": [[u, v], ...],
//         "labels": {"ID": {"bits": B, "hex": "..."}}}   (labels optional)
// Text:  "N M", then M lines "u v", then optional lines "ID B HEX" with "-"
//        as the hex of an empty string. '#' starts a comment.
//
// Certificates use the same per-vertex {"bits", "hex"} encoding under
// "certs" in JSON, or "N" followed by "ID B HEX" lines in text.

nlohmann::json bits_to_json(const BitString& bits);
BitString bits_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

nlohmann::json certs_to_json(const CertificateAssignment& certs);
CertificateAssignment certs_from_json(const nlohmann::json& j, std::size_t n);
std::string certs_to_text(const CertificateAssignment& certs);
CertificateAssignment certs_from_text(const std::string& text, std::size_t n);

/// Throws InputError on unreadable or malformed files.
Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);
CertificateAssignment read_certs(const std::filesystem::path& path, std::size_t n);
void write_certs(const CertificateAssignment& certs, const std::filesystem::path& path);

}  // namespace localcert

#endif  // LOCALCERT_GRAPH_IO_HPP
