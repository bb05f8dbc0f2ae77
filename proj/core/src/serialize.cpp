#include "diamdom/serialize.hpp"

#include <nlohmann/json.hpp>

namespace diamdom {
namespace {

using Json = nlohmann::ordered_json;

Json distance(Distance d) { return d ? Json(*d) : Json(nullptr); }

Json vertices(const VertexSet& s) { return Json(std::vector<Vertex>(s.begin(), s.end())); }

Json edges(const std::vector<Edge>& list) {
  Json out = Json::array();
  for (const Edge& e : list) out.push_back({e.u, e.v});
  return out;
}

Json witness(const ClassWitness& w) {
  Json out;
  out["flag"] = std::string(w.flag);
  out["pattern"] = std::string(to_string(w.pattern));
  out["occurrence"] = w.occurrence;
  return out;
}

}  // namespace

std::string to_json(const ClassReport& r) {
  Json j;
  j["diameter"] = distance(r.diameter);
  j["girth"] = distance(r.girth);
  j["triangle_free"] = r.triangle_free;
  j["c4_free"] = r.c4_free;
  j["c5_free"] = r.c5_free;
  j["claw_free"] = r.claw_free;
  j["k14_free"] = r.k14_free;
  j["2k2_free"] = r.two_k2_free;
  j["split"] = r.split;
  j["line_graph"] = r.line_graph;
  j["witness"] = r.witness() ? witness(*r.witness()) : Json(nullptr);
  Json all = Json::array();
  for (const auto& w : r.witnesses) all.push_back(witness(w));
  j["witnesses"] = std::move(all);
  return j.dump(2);
}

std::string to_json(const Graph& g, const DominationCertificate& cert) {
  Json j;
  j["gamma"] = cert.gamma;
  j["set"] = vertices(cert.set);
  j["method"] = std::string(to_string(cert.method));
  j["verified"] = is_dominating_set(g, cert.set) && cert.gamma == cert.set.size();
  return j.dump(2);
}

std::string to_json(const Graph& g, const Matching& m) {
  Json j;
  j["size"] = m.size();
  j["edges"] = edges(m.edges());
  j["maximal"] = is_valid_matching(g, m) && is_maximal_matching(g, m);
  return j.dump(2);
}

std::string sidecar_json(const ReductionInstance& inst) {
  Json j;
  j["kind"] = std::string(to_string(inst.kind));
  j["k"] = inst.k;
  j["kprime"] = inst.kprime;
  j["d"] = inst.d;
  j["n"] = inst.gprime.vertex_count();
  j["m"] = inst.gprime.edge_count();
  j["notices"] = inst.notices;
  Json prov = Json::array();
  for (Vertex v = 0; v < inst.provenance.size(); ++v) {
    Json p;
    p["vertex"] = v;
    p["role"] = inst.provenance[v].role;
    p["source"] = inst.provenance[v].source;
    prov.push_back(std::move(p));
  }
  j["provenance"] = std::move(prov);
  return j.dump(2);
}

std::string to_json(const ReductionReport& report) {
  Json j;
  j["passed"] = report.passed();
  j["incomplete"] = report.incomplete;
  j["source_value"] = report.source_value ? Json(*report.source_value) : Json(nullptr);
  j["target_gamma"] = report.target_gamma ? Json(*report.target_gamma) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j.dump(2);
}

}  // namespace diamdom
