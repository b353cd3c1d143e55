#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyfib.h"

int main(int argc, char** argv) {
  CLI::App app{"Exact analyzer of the irregular fibers of a polynomial in two variables"};
  std::string expr, poly_file, value, vars = "x,y", dot_dir;
  int indent = 2;
  auto* oexpr = app.add_option("--expr", expr, "polynomial expression");
  auto* ofile = app.add_option("--poly", poly_file, "file containing the expression");
  auto* ovalue = app.add_option("--value", value, "report a single rational value p/q");
  app.add_option("--vars", vars, "the two variable names, comma separated");
  app.add_option("--dot", dot_dir, "directory for DOT exports of the graphs");
  app.add_option("--json-indent", indent, "JSON indentation (negative: compact)");
  CLI11_PARSE(app, argc, argv);

  if ((oexpr->count() == 0) == (ofile->count() == 0)) {
    std::cerr << "exactly one of --expr or --poly is required\n";
    return PF_ERR_INPUT;
  }
  if (ofile->count()) {
    std::ifstream in(poly_file);
    if (!in) {
      std::cerr << "cannot read " << poly_file << "\n";
      return PF_ERR_INPUT;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    expr = ss.str();
  }
  auto comma = vars.find(',');
  if (comma == std::string::npos) {
    std::cerr << "--vars needs two names: a,b\n";
    return PF_ERR_INPUT;
  }
  std::string vx = vars.substr(0, comma), vy = vars.substr(comma + 1);

  pf_result* r = nullptr;
  int rc = pf_analyze(expr.c_str(), vx.c_str(), vy.c_str(),
                      ovalue->count() ? value.c_str() : nullptr, indent, &r);
  if (rc != PF_OK) {
    std::cerr << "error: " << (pf_error(r) ? pf_error(r) : "unknown") << "\n";
    pf_free(r);
    return rc;
  }
  std::cout << pf_json(r) << "\n";

  if (!dot_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dot_dir, ec);
    for (int i = 0; i < pf_graph_count(r); ++i) {
      std::filesystem::path p = std::filesystem::path(dot_dir) / pf_graph_name(r, i);
      std::ofstream out(p);
      if (!out) {
        std::cerr << "cannot write " << p << "\n";
        pf_free(r);
        return PF_ERR_INPUT;
      }
      out << pf_graph_dot(r, i);
    }
  }
  pf_free(r);
  return PF_OK;
}
