#include "cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "diamdom/domination.hpp"
#include "diamdom/error.hpp"
#include "diamdom/gadgets.hpp"
#include "diamdom/graph_io.hpp"
#include "diamdom/mmm.hpp"
#include "diamdom/pattern.hpp"
#include "diamdom/recognition.hpp"
#include "diamdom/serialize.hpp"

namespace diamdom::cli {
namespace {

struct Config {
  std::string input;
  std::string format = "edge_list";
  std::string output = "json";
  std::string method = "auto";
  std::optional<std::size_t> budget;
  std::optional<std::size_t> cap;
  bool two_k2_free = false;
  std::string kind;
  std::size_t k = 0;
  std::size_t d = 3;
  std::vector<Vertex> clique;
  std::string prefix;
  std::size_t node_limit = 0;
};

Graph load(const Config& c) {
  return read_graph_file(c.input, c.format == "dimacs" ? GraphFormat::dimacs : GraphFormat::edge_list);
}

std::string distance_text(Distance d) { return d ? std::to_string(*d) : "inf"; }

int cmd_recognize(const Config& c, std::ostream& out) {
  ClassReport r = classify(load(c));
  if (c.output == "json") {
    out << to_json(r) << "\n";
    return kOk;
  }
  out << "diameter " << distance_text(r.diameter) << "\ngirth " << distance_text(r.girth) << "\n";
  const std::pair<const char*, bool> flags[] = {
      {"triangle_free", r.triangle_free}, {"c4_free", r.c4_free},   {"c5_free", r.c5_free},
      {"claw_free", r.claw_free},         {"k14_free", r.k14_free}, {"2k2_free", r.two_k2_free},
      {"split", r.split},                 {"line_graph", r.line_graph}};
  for (auto [name, value] : flags) out << name << " " << (value ? "yes" : "no") << "\n";
  for (const auto& w : r.witnesses) {
    out << "witness " << w.flag << " " << to_string(w.pattern) << " at";
    for (Vertex v : w.occurrence) out << " " << v;
    out << "\n";
  }
  return kOk;
}

DominationCertificate solve_gamma(const Graph& g, const Config& c) {
  const std::string& m = c.method;
  if (m == "exact") return gamma_exact(g);
  if (m == "girth5-diam2") return gamma_girth5_diam2(g);
  if (m == "line-diam2") return gamma_line_diam2(g);
  if (m == "clawfree-diam2") return gamma_clawfree_diam2(g);
  if (m == "bounded") {
    if (!c.budget) throw ContractViolation("--method bounded needs --budget");
    auto cert = gamma_bounded(g, *c.budget);
    if (!cert) {
      throw ClassMismatch("no dominating set of size <= " + std::to_string(*c.budget));
    }
    return *cert;
  }
  // auto: cheapest applicable pipeline first.
  Distance d = diameter(g);
  bool diam2 = g.vertex_count() > 0 && d && *d <= 2;
  Distance gi = girth(g);
  if (d && *d == 2 && gi && *gi == 5) return gamma_girth5_diam2(g);
  if (diam2 && root_graph(g)) return gamma_line_diam2(g);
  if (diam2 && !contains_induced(g, PatternName::claw)) return gamma_clawfree_diam2(g);
  return gamma_exact(g);
}

int cmd_gamma(const Config& c, std::ostream& out) {
  Graph g = load(c);
  DominationCertificate cert = solve_gamma(g, c);
  if (c.output == "json") {
    out << to_json(g, cert) << "\n";
  } else {
    out << "gamma " << cert.gamma << " (" << to_string(cert.method) << ")\nset";
    for (Vertex v : cert.set) out << " " << v;
    out << "\n";
  }
  return kOk;
}

int cmd_mmm(const Config& c, std::ostream& out) {
  Graph g = load(c);
  std::size_t cap = c.cap ? *c.cap
                          : (c.two_k2_free ? two_k2_free_stable_set_cap(g) : kDefaultStableSetCap);
  Matching m = minimum_maximal_matching(g, cap);
  if (c.output == "json") {
    out << to_json(g, m) << "\n";
  } else {
    out << "size " << m.size() << "\nedges";
    for (const Edge& e : m.edges()) out << " " << e.u << "-" << e.v;
    out << "\n";
  }
  return kOk;
}

ReductionInstance build(const Graph& g, const Config& c) {
  switch (reduction_kind_from_string(c.kind)) {
    case ReductionKind::cubic_clawfree: return reduce_cubic_clawfree(g, c.k, c.d);
    case ReductionKind::vc_k14: return reduce_vc_k14(g, c.k);
    case ReductionKind::split_trianglefree: {
      std::optional<SplitPartition> p;
      if (!c.clique.empty()) {
        VertexSet clique(g.vertex_count(), c.clique);
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          if (!clique.contains(v)) rest.push_back(v);
        }
        p = SplitPartition{clique, VertexSet(g.vertex_count(), std::move(rest))};
      } else {
        p = split_partition(g);
        if (!p) throw ClassMismatch("source graph is not split");
      }
      return reduce_split_trianglefree(g, *p, c.k);
    }
  }
  throw InternalError("unhandled reduction kind");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ContractViolation("cannot write " + path);
  f << text;
}

int cmd_reduce(const Config& c, std::ostream& out, std::ostream& err) {
  Graph g = load(c);
  ReductionInstance inst = build(g, c);
  for (const auto& note : inst.notices) err << "notice: " << note << "\n";
  if (!c.prefix.empty()) {
    write_file(c.prefix + ".el", to_edge_list(inst.gprime));
    write_file(c.prefix + ".json", sidecar_json(inst) + "\n");
  }
  if (c.output == "json") {
    out << sidecar_json(inst) << "\n";
  } else {
    out << to_string(inst.kind) << ": " << inst.gprime.vertex_count() << " vertices, "
        << inst.gprime.edge_count() << " edges, kprime " << inst.kprime << "\n";
  }
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  Graph g = load(c);
  ReductionInstance inst = build(g, c);
  for (const auto& note : inst.notices) err << "notice: " << note << "\n";
  ReductionReport report = verify_reduction(inst, g, VerifyOptions{c.node_limit});
  if (c.output == "json") {
    out << to_json(report) << "\n";
  } else {
    for (const auto& check : report.checks) {
      out << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << "\n";
    }
    if (report.incomplete) out << "INCOMPLETE equivalence: node limit reached\n";
  }
  if (report.incomplete) return kResource;
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domination, matching and reduction tools for small graphs", "diamdom"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", c.input, "Graph file")->required();
    sub->add_option("--format", c.format, "Input format")
        ->check(CLI::IsMember({"edge_list", "dimacs"}));
    sub->add_option("--output", c.output, "Output style")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_reduction = [&](CLI::App* sub) {
    sub->add_option("kind", c.kind, "cubic-clawfree | vc-k14 | split-trianglefree")
        ->required()
        ->check(CLI::IsMember({"cubic-clawfree", "vc-k14", "split-trianglefree"}));
    add_common(sub);
    sub->add_option("-k", c.k, "Source budget")->required();
    sub->add_option("-d", c.d, "Target diameter (cubic-clawfree)");
    sub->add_option("--clique", c.clique, "Clique side of a split source (default: computed)")
        ->delimiter(',');
  };

  auto* recognize = app.add_subcommand("recognize", "Class flags, diameter and girth");
  add_common(recognize);
  auto* gamma = app.add_subcommand("gamma", "Minimum dominating set");
  add_common(gamma);
  gamma->add_option("--method", c.method, "Solver")
      ->check(CLI::IsMember(
          {"auto", "exact", "clawfree-diam2", "line-diam2", "girth5-diam2", "bounded"}));
  gamma->add_option("--budget", c.budget, "Largest set size tried by --method bounded");
  auto* mmm = app.add_subcommand("mmm", "Minimum maximal matching");
  add_common(mmm);
  mmm->add_option("--cap", c.cap, "Maximal stable set enumeration cap");
  mmm->add_flag("--2k2-free", c.two_k2_free, "Use the n(n-1)/2+1 cap for 2K2-free inputs");
  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  add_reduction(reduce);
  reduce->add_option("--out", c.prefix, "Write PREFIX.el and PREFIX.json");
  auto* verify = app.add_subcommand("verify-reduction", "Check a reduction against oracles");
  add_reduction(verify);
  verify->add_option("--node-limit", c.node_limit, "Branch-and-bound node limit (0: none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*recognize) return cmd_recognize(c, out);
    if (*gamma) return cmd_gamma(c, out);
    if (*mmm) return cmd_mmm(c, out);
    if (*reduce) return cmd_reduce(c, out, err);
    if (*verify) return cmd_verify(c, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ClassMismatch& e) {
    err << "class mismatch: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ContractViolation& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what();
    if (e.best_bound()) err << " (best bound " << *e.best_bound() << ")";
    err << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kCheckFailed;
}

}  // namespace diamdom::cli
