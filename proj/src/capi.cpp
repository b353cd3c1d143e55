#include "polyfib.h"

#include <string>
#include <vector>

#include "invariants.hpp"
#include "jsonout.hpp"
#include "parser.hpp"

using namespace polyfib;

struct pf_result {
  std::string json;
  std::string error;
  bool ok = false;
  std::vector<std::pair<std::string, std::string>> graphs;
};

extern "C" {

int pf_analyze(const char* expr, const char* varx, const char* vary,
               const char* value, int json_indent, pf_result** out) {
  auto* r = new pf_result();
  *out = r;
  try {
    if (!expr) throw InputError("missing expression");
    std::string vx = varx ? varx : "x";
    std::string vy = vary ? vary : "y";
    BPoly f = parse_polynomial(expr, vx, vy);
    Analysis an;
    if (value) {
      Rat c;
      try {
        BPoly vc = parse_polynomial(value, vx, vy);
        if (!vc.is_constant()) throw InputError("not a constant");
        c = vc.coef(0, 0).rat();
      } catch (const InputError&) {
        throw InputError(std::string("invalid rational value '") + value + "'");
      }
      an.shared = prepare(f);
      an.fibers.push_back(fiber_report(an.shared, AlgNum(c)));
    } else {
      an = analyze(f);
    }
    r->json = analysis_json(an, json_indent);
    r->graphs = analysis_dot(an);
    r->ok = true;
    return PF_OK;
  } catch (const InputError& e) {
    r->error = e.what();
    return PF_ERR_INPUT;
  } catch (const std::exception& e) {
    r->error = e.what();
    return PF_ERR_INTERNAL;
  }
}

const char* pf_json(const pf_result* r) { return r && r->ok ? r->json.c_str() : nullptr; }

const char* pf_error(const pf_result* r) { return r && !r->ok ? r->error.c_str() : nullptr; }

int pf_graph_count(const pf_result* r) { return r ? (int)r->graphs.size() : 0; }

const char* pf_graph_name(const pf_result* r, int i) {
  if (!r || i < 0 || i >= (int)r->graphs.size()) return nullptr;
  return r->graphs[i].first.c_str();
}

const char* pf_graph_dot(const pf_result* r, int i) {
  if (!r || i < 0 || i >= (int)r->graphs.size()) return nullptr;
  return r->graphs[i].second.c_str();
}

void pf_free(pf_result* r) { delete r; }

}  // extern "C"
