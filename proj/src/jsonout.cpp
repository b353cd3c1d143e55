#include "jsonout.hpp"

#include <sstream>

#include <json.hpp>

#include "parser.hpp"

namespace polyfib {

namespace {

using Json = nlohmann::ordered_json;

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Json graph_json(const DualGraph& g) {
  Json jg;
  jg["vertices"] = Json::array();
  for (auto& v : g.vertices) {
    Json jv;
    jv["id"] = v.label;
    switch (v.kind) {
      case VertexKind::Affine: jv["kind"] = "affine-component"; break;
      case VertexKind::Divisor: jv["kind"] = "divisor-component"; break;
      case VertexKind::Dicritical: jv["kind"] = "dicritical"; break;
    }
    if (v.kind != VertexKind::Affine) jv["mult"] = v.multiplicity;
    jg["vertices"].push_back(std::move(jv));
  }
  jg["edges"] = Json::array();
  for (auto& e : g.edges)
    jg["edges"].push_back({g.vertices[e.first].label, g.vertices[e.second].label});
  return jg;
}

Json fiber_json(const FiberReport& v) {
  Json jf;
  jf["value"] = algnum_str(v.c);
  jf["n"] = v.n;
  jf["r"] = v.r;
  jf["chi"] = v.chi;
  jf["acyclic"] = v.j.acyclic;
  jf["strongly_acyclic"] = v.j.strongly_acyclic;
  Json jj;
  jj["injective"] = v.j.injective;
  jj["surjective"] = v.j.surjective;
  jj["isomorphism"] = v.j.isomorphism;
  jj["rk_ker"] = v.j.rk_ker_jc;
  jf["j"] = std::move(jj);
  Json jm;
  jm["rk_inv"] = v.monodromy.rk_inv;
  jm["rk_K1"] = v.monodromy.rk_K1;
  jm["jordan2_eigen1"] = v.monodromy.jordan2_eigen1;
  Json jw;
  jw["W-1"] = v.monodromy.w_minus1;
  jw["W0"] = v.monodromy.w0;
  jw["W1"] = v.monodromy.w1;
  jw["W2"] = v.monodromy.w2;
  jm["vanishing"] = std::move(jw);
  jf["monodromy"] = std::move(jm);
  jf["G_c"] = graph_json(v.graphs.Gc);
  jf["Gbar_c"] = graph_json(v.graphs.barGc);
  return jf;
}

}  // namespace

std::string algnum_str(const AlgNum& c) {
  if (c.is_rational()) return rat_str(c.rat());
  Box b = c.box();
  std::ostringstream os;
  os << "root(" << c.minpoly().str("x") << ", [" << rat_str(b.re.lo) << ","
     << rat_str(b.re.hi) << "]x[" << rat_str(b.im.lo) << "," << rat_str(b.im.hi)
     << "])";
  return os.str();
}

std::string analysis_json(const Analysis& an, int indent) {
  Json j;
  j["polynomial"] = poly_to_string(an.shared.f);
  j["B_aff"] = Json::array();
  for (auto& c : an.shared.B_aff) j["B_aff"].push_back(algnum_str(c));
  j["B_inf"] = Json::array();
  for (auto& c : an.shared.B_inf) j["B_inf"].push_back(algnum_str(c));
  j["chi_generic"] = an.shared.chi_generic;
  j["fibers"] = Json::array();
  for (auto& v : an.fibers) j["fibers"].push_back(fiber_json(v));
  return indent < 0 ? j.dump() : j.dump(indent);
}

std::vector<std::pair<std::string, std::string>> analysis_dot(
    const Analysis& an) {
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i < an.fibers.size(); ++i) {
    std::string base = "fiber" + std::to_string(i);
    out.emplace_back(base + "_G_c.dot",
                     to_dot(an.fibers[i].graphs.Gc, "G_c"));
    out.emplace_back(base + "_Gbar_c.dot",
                     to_dot(an.fibers[i].graphs.barGc, "Gbar_c"));
  }
  return out;
}

}  // namespace polyfib
