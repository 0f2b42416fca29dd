// localcert: command-line front end for the certification library.
//
// Every subcommand prints one JSON report (stdout, or --report FILE).
// Exit codes: 0 accepted / sound, 1 rejected / fooled, 2 error or budget
// exceeded, 64 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "localcert/generators.hpp"
#include "localcert/graph_io.hpp"
#include "localcert/label_encoder.hpp"
#include "localcert/lowerbound.hpp"
#include "localcert/path_canonical.hpp"
#include "localcert/radius_reduction.hpp"
#include "localcert/registry.hpp"

using nlohmann::json;
using namespace localcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 64;

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  std::string report_path;
};

json graph_stats(const Graph& g) {
  return json{{"n", g.order()}, {"m", g.size()}, {"max_degree", g.max_degree()}, {"max_label_bits", g.max_label_bits()}};
}

json size_stats(const CertificateAssignment& certs) {
  std::size_t lo = SIZE_MAX;
  std::size_t hi = 0;
  double total = 0;
  for (VertexId v = 1; v <= certs.order(); ++v) {
    lo = std::min(lo, certs[v].size());
    hi = std::max(hi, certs[v].size());
    total += static_cast<double>(certs[v].size());
  }
  if (certs.order() == 0) lo = 0;
  return json{{"min", lo}, {"max", hi}, {"mean", certs.order() ? total / static_cast<double>(certs.order()) : 0.0}};
}

json verdict_json(const Verdict& v) {
  return json{{"accepted", v.accepted}, {"rejecting_vertices", v.rejecting_vertices}};
}

json scheme_json(const Scheme& s) { return json{{"name", s.name}, {"radius", s.radius}}; }

// Runs the prover; a prover refusing the instance becomes a rejection record.
std::optional<CertificateAssignment> try_prove(const Scheme& scheme, const Graph& g, json& report) {
  try {
    return scheme.prover(g);
  } catch (const ContractViolation& e) {
    report["prover_error"] = e.what();
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"localcert: proof labeling schemes, radius reduction and lower-bound experiments"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--seed", globals.seed, "seed for every random choice");
  app.add_option("--jobs", globals.jobs, "worker threads")->envname("LOCALCERT_JOBS")->check(CLI::PositiveNumber);
  app.add_option("--report", globals.report_path, "write the report here instead of stdout");

  std::string scheme_name;
  std::string graph_path;
  std::string certs_path;
  std::string out_path;
  std::string spec;
  std::size_t label_bits = 0;
  int max_bits = 0;
  double time_limit = 0;
  std::uint64_t max_evals = 50'000'000;
  int delta = 1;
  std::size_t max_degree = 0;
  int depth = 3;
  int radius = 1;
  std::size_t truncate = 1;
  std::string emit_dir;
  std::string direction;
  bool encoded_input = false;
  int d = 2;

  auto* schemes = app.add_subcommand("schemes", "list registered schemes");

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--spec", spec, "path:N cycle:N star:N complete:N tree:N[:SEED] random:N:MAXDEG[:SEED] pdelta:D:DEPTH:X[:SEED]")
      ->required();
  gen->add_option("--labels", label_bits, "random labels of up to this many bits");
  gen->add_option("--out", out_path, "graph file (.json or text)");

  auto* certify = app.add_subcommand("certify", "run a scheme on a graph");
  certify->add_option("--scheme", scheme_name)->required();
  certify->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  certify->add_option("--certs", certs_path, "certificates to verify instead of the prover's")->check(CLI::ExistingFile);
  certify->add_option("--emit-certs", out_path, "write the certificates used");

  auto* attack = app.add_subcommand("attack", "exhaustive search for a fooling assignment");
  attack->add_option("--scheme", scheme_name)->required();
  attack->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  attack->add_option("--max-bits", max_bits)->required()->check(CLI::NonNegativeNumber);
  attack->add_option("--time-limit", time_limit, "seconds");
  attack->add_option("--max-evals", max_evals, "verifier invocations");

  auto* reduce_cmd = app.add_subcommand("reduce", "radius-reduced prover, sizes and lemma checks");
  reduce_cmd->add_option("--scheme", scheme_name)->required();
  reduce_cmd->add_option("--delta", delta)->required();
  reduce_cmd->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("--max-degree", max_degree, "degree promise");
  reduce_cmd->add_option("--emit-certs", out_path);

  auto* reduce_verify = app.add_subcommand("reduce-verify", "reduced verifier on given certificates");
  reduce_verify->add_option("--scheme", scheme_name)->required();
  reduce_verify->add_option("--delta", delta)->required();
  reduce_verify->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  reduce_verify->add_option("--certs", certs_path)->required()->check(CLI::ExistingFile);
  reduce_verify->add_option("--max-degree", max_degree);

  auto* glue_demo = app.add_subcommand("glue-demo", "collision, glue and full acceptance on P_Delta");
  glue_demo->add_option("--delta", delta)->required();
  glue_demo->add_option("--depth", depth)->required();
  glue_demo->add_option("--r", radius)->required();
  glue_demo->add_option("--truncate-bits", truncate, "certificate cap; 0 for the uncapped scheme")->capture_default_str();
  glue_demo->add_option("--emit", emit_dir, "write graph.json and certs.json here");

  auto* encode = app.add_subcommand("encode-labels", "g(G)");
  encode->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  encode->add_option("--out", out_path)->required();
  auto* decode = app.add_subcommand("decode-labels", "g'(H)");
  decode->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  decode->add_option("--out", out_path)->required();

  auto* wrap = app.add_subcommand("wrap", "labeled/unlabeled wrapping of a scheme");
  wrap->add_option("--scheme", scheme_name)->required();
  wrap->add_option("--direction", direction)->required()->check(CLI::IsMember({"to-unlabeled", "to-labeled"}));
  wrap->add_option("--graph", graph_path, "labeled graph G")->required()->check(CLI::ExistingFile);
  wrap->add_flag("--encoded", encoded_input, "to-unlabeled: the graph is already g(G)");

  auto* shave_cmd = app.add_subcommand("shave", "radius-1 shaved scheme on a path");
  shave_cmd->add_option("--scheme", scheme_name)->required();
  shave_cmd->add_option("--d", d)->required();
  shave_cmd->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);

  auto* stats = app.add_subcommand("stats", "graph statistics");
  stats->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  json report;
  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
  report["command"] = command;
  report["seed"] = globals.seed;
  int code = kExitOk;

  try {
    if (*schemes) {
      json list = json::array();
      for (const auto& e : list_schemes()) list.push_back({{"pattern", e.pattern}, {"description", e.description}});
      report["schemes"] = list;
    } else if (*gen) {
      Graph g = generate(spec, globals.seed);
      if (label_bits > 0) g = with_random_labels(g, label_bits, globals.seed);
      report["graph"] = graph_stats(g);
      if (out_path.empty()) {
        report["graph_document"] = graph_to_json(g);
      } else {
        write_graph(g, out_path);
        report["written"] = out_path;
      }
    } else if (*certify) {
      const Graph g = read_graph(graph_path);
      const Scheme scheme = make_scheme(scheme_name);
      report["graph"] = graph_stats(g);
      report["scheme"] = scheme_json(scheme);
      std::optional<CertificateAssignment> certs;
      if (!certs_path.empty()) {
        certs = read_certs(certs_path, g.order());
      } else {
        certs = try_prove(scheme, g, report);
      }
      if (!certs) {
        report["verdict"] = {{"accepted", false}, {"rejecting_vertices", json::array()}};
        code = kExitRejected;
      } else {
        const Verdict v = run_all(scheme, g, *certs, globals.jobs);
        report["verdict"] = verdict_json(v);
        report["cert_sizes"] = size_stats(*certs);
        if (!out_path.empty()) write_certs(*certs, out_path);
        code = v.accepted ? kExitOk : kExitRejected;
      }
    } else if (*attack) {
      const Graph g = read_graph(graph_path);
      const Scheme scheme = make_scheme(scheme_name);
      SearchLimits limits;
      limits.max_evaluations = max_evals;
      if (time_limit > 0) {
        limits.time_limit = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(time_limit));
      }
      const auto outcome = soundness_search(scheme, g, max_bits, limits);
      report["graph"] = graph_stats(g);
      report["scheme"] = scheme_json(scheme);
      json result{{"kind", to_string(outcome.kind)},
                  {"max_bits", outcome.max_bits},
                  {"space_size", outcome.space_size},
                  {"stopped_at", outcome.stopped_at},
                  {"evaluations", outcome.evaluations}};
      if (outcome.witness) result["witness"] = certs_to_json(*outcome.witness);
      report["outcome"] = result;
      code = outcome.kind == SoundnessOutcome::Kind::kSound    ? kExitOk
             : outcome.kind == SoundnessOutcome::Kind::kFooled ? kExitRejected
                                                               : kExitError;
    } else if (*reduce_cmd) {
      const Graph g = read_graph(graph_path);
      const Scheme base = make_scheme(scheme_name);
      const std::optional<std::size_t> promise = max_degree ? std::optional(max_degree) : std::nullopt;
      const Scheme reduced = reduce(base, delta, promise);
      report["graph"] = graph_stats(g);
      report["scheme"] = scheme_json(reduced);
      const auto base_certs = try_prove(base, g, report);
      if (!base_certs) {
        code = kExitRejected;
      } else {
        const auto certs = reduced_prover(base, delta, g);
        const Verdict v = run_all(reduced, g, certs, globals.jobs);
        report["verdict"] = verdict_json(v);
        report["cert_sizes"] = size_stats(certs);
        report["base_cert_sizes"] = size_stats(*base_certs);
        std::size_t max_packets = 0;
        for (VertexId u = 1; u <= g.order(); ++u) {
          max_packets = std::max(max_packets, decode_packets(certs[u], g.order(), delta).size());
        }
        report["packets"] = {{"max_per_vertex", max_packets},
                             {"bound", packet_count_bound(g.max_degree(), delta)}};
        report["bounds"] = {{"size_bound", size_bound(g.max_degree(), delta, g.order(), base_certs->size_bits(),
                                                      g.max_label_bits())}};
        const auto lemmas = check_lemmas(g, certs, delta, base.radius);
        report["lemmas"] = {{"distances", lemmas.distances},   {"membership", lemmas.membership},
                            {"agreement", lemmas.agreement},   {"well_formed", lemmas.well_formed},
                            {"coverage", lemmas.coverage},     {"violations", lemmas.violations}};
        if (const auto mismatch = reconstruction_mismatch(base, delta, g)) report["reconstruction_mismatch"] = *mismatch;
        if (!out_path.empty()) write_certs(certs, out_path);
        code = v.accepted ? kExitOk : kExitRejected;
      }
    } else if (*reduce_verify) {
      const Graph g = read_graph(graph_path);
      const Scheme base = make_scheme(scheme_name);
      const auto certs = read_certs(certs_path, g.order());
      const std::optional<std::size_t> promise = max_degree ? std::optional(max_degree) : std::nullopt;
      report["graph"] = graph_stats(g);
      report["scheme"] = scheme_json(reduce(base, delta, promise));
      json failures = json::object();
      bool accepted = true;
      for (VertexId v = 1; v <= g.order(); ++v) {
        const auto verdict = reduced_verifier(induced_view(g, certs, v, base.radius - delta), delta, base, promise);
        if (!verdict.accepted) {
          accepted = false;
          failures[std::to_string(v)] = verdict.failed;
        }
      }
      report["verdict"] = {{"accepted", accepted}, {"failures", failures}};
      code = accepted ? kExitOk : kExitRejected;
    } else if (*glue_demo) {
      const std::optional<std::size_t> cap = truncate ? std::optional(truncate) : std::nullopt;
      const Scheme scheme = scheme_pdelta(delta, radius, cap);
      report["scheme"] = scheme_json(scheme);
      const auto found = find_collision(delta, depth, radius, scheme, globals.jobs);
      report["counts"] = {{"instances", found.instances},
                          {"distinct_strings", found.distinct_strings},
                          {"distinct_fingerprints", found.distinct_fingerprints},
                          {"structure_patterns", found.structure_patterns},
                          {"fingerprint_space", found.fingerprint_space},
                          {"max_cert_bits_on_t", found.max_cert_bits_on_t},
                          {"pigeonhole", found.distinct_strings > found.fingerprint_space}};
      if (!found.collision) {
        report["collision"] = nullptr;
        code = kExitRejected;
      } else {
        const auto glued = glue(*found.first, *found.second, radius);
        const Verdict v = demonstrate(scheme, glued, globals.jobs);
        report["collision"] = {{"first", found.collision->first},
                               {"second", found.collision->second},
                               {"x1", found.first->instance.half.to_binary()},
                               {"x2", found.second->instance.half.to_binary()}};
        report["glued"] = {{"graph", graph_stats(glued.graph)},
                           {"member", glued.membership.member},
                           {"diagnostic", glued.membership.diagnostic},
                           {"document", graph_to_json(glued.graph)}};
        report["verdict"] = verdict_json(v);
        if (!emit_dir.empty()) {
          std::filesystem::create_directories(emit_dir);
          write_graph(glued.graph, std::filesystem::path(emit_dir) / "graph.json");
          write_certs(glued.certs, std::filesystem::path(emit_dir) / "certs.json");
        }
        code = v.accepted ? kExitOk : kExitRejected;
      }
    } else if (*encode) {
      const Graph g = read_graph(graph_path);
      const Graph h = encode_graph(g);
      write_graph(h, out_path);
      report["graph"] = graph_stats(g);
      report["encoded"] = graph_stats(h);
      report["bounds"] = {{"order_claim", 5 * g.order() * (g.max_label_bits() + 1)}};
    } else if (*decode) {
      const Graph h = read_graph(graph_path);
      try {
        const Graph g = decode_graph(h);
        write_graph(g, out_path);
        report["graph"] = graph_stats(g);
      } catch (const DecodeError& e) {
        report["error"] = e.what();
        report["vertex"] = e.vertex();
        code = kExitError;
      }
    } else if (*wrap) {
      const Graph g = read_graph(graph_path);
      const Scheme inner = make_scheme(scheme_name);
      report["graph"] = graph_stats(g);
      if (direction == "to-unlabeled") {
        const Scheme wrapped = wrap_unlabeled(inner);
        const Graph h = encoded_input ? g : encode_graph(g);
        const Graph original = decode_graph(h);
        report["scheme"] = scheme_json(wrapped);
        report["encoded"] = graph_stats(h);
        const auto certs = try_prove(wrapped, h, report);
        if (!certs) {
          code = kExitRejected;
        } else {
          const Verdict v = run_all(wrapped, h, *certs, globals.jobs);
          report["verdict"] = verdict_json(v);
          report["cert_sizes"] = size_stats(*certs);
          report["bounds"] = {{"size_bound", wrap_unlabeled_size_bound(inner.prover(original).size_bits(),
                                                                      original.max_label_bits(), original.order())}};
          code = v.accepted ? kExitOk : kExitRejected;
        }
      } else {
        const Scheme wrapped = wrap_labeled(inner);
        report["scheme"] = scheme_json(wrapped);
        const auto certs = try_prove(wrapped, g, report);
        if (!certs) {
          code = kExitRejected;
        } else {
          const Graph h = encode_graph(g);
          const Verdict v = run_all(wrapped, g, *certs, globals.jobs);
          report["verdict"] = verdict_json(v);
          report["cert_sizes"] = size_stats(*certs);
          report["bounds"] = {{"size_bound", wrap_labeled_size_bound(inner.prover(h).size_bits(), g.max_label_bits(),
                                                                    h.order())}};
          code = v.accepted ? kExitOk : kExitRejected;
        }
      }
    } else if (*shave_cmd) {
      const Graph g = read_graph(graph_path);
      const Scheme base = make_scheme(scheme_name);
      if (base.radius != d) throw InputError("scheme radius " + std::to_string(base.radius) + " differs from --d");
      if (!is_path(g)) throw InputError("shave needs a path");
      const Scheme shaved = shave(base);
      report["graph"] = graph_stats(g);
      report["scheme"] = scheme_json(shaved);
      const auto certs = try_prove(shaved, g, report);
      if (!certs) {
        code = kExitRejected;
      } else {
        const Verdict v = run_all(shaved, g, *certs, globals.jobs);
        const auto j = canonical_ids(g);
        std::vector<VertexId> perm(j.begin() + 1, j.end());
        const std::size_t s = base.prover(g.relabeled(perm)).size_bits();
        json sizes = json::object();
        for (VertexId u = 1; u <= g.order(); ++u) sizes[std::to_string(u)] = (*certs)[u].size();
        report["verdict"] = verdict_json(v);
        report["cert_sizes"] = size_stats(*certs);
        report["per_vertex_bits"] = sizes;
        report["bounds"] = {{"shaved_size_bound", shaved_size_bound(d, s, g.max_label_bits(), g.order())}};
        json comparison = {{"shaved", {{"max_bits", certs->size_bits()}, {"identifier_fields", shaved_identifier_fields()}}}};
        if (d >= 2) {
          const Scheme generic = reduce(base, d - 1);
          const auto gcerts = generic.prover(g);
          std::size_t fields = 0;
          for (VertexId u = 1; u <= g.order(); ++u) fields = std::max(fields, generic_identifier_fields(gcerts[u], g.order(), d - 1));
          comparison["generic"] = {{"scheme", generic.name}, {"max_bits", gcerts.size_bits()}, {"identifier_fields", fields}};
        }
        report["comparison"] = comparison;
        code = v.accepted ? kExitOk : kExitRejected;
      }
    } else if (*stats) {
      const Graph g = read_graph(graph_path);
      report["graph"] = graph_stats(g);
      std::map<std::size_t, std::size_t> histogram;
      for (VertexId v = 1; v <= g.order(); ++v) ++histogram[g.degree(v)];
      json h = json::object();
      for (auto [deg, count] : histogram) h[std::to_string(deg)] = count;
      report["degree_histogram"] = h;
      report["diameter"] = diameter(g);
    }
  } catch (const std::exception& e) {
    report["error"] = e.what();
    code = kExitError;
  }

  report["exit_code"] = code;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  const std::string text = report.dump(2) + "\n";
  if (globals.report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(globals.report_path);
    if (!out) {
      std::cerr << "cannot write " << globals.report_path << "\n";
      return kExitError;
    }
    out << text;
  }
  if (report.contains("error")) std::cerr << "localcert: " << report["error"].get<std::string>() << "\n";
  return code;
}
