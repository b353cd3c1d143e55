#include "graph.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyfib {

int DualGraph::add_vertex(VertexKind k, int mult, std::string label) {
  vertices.push_back(GraphVertex{k, mult, std::move(label)});
  return (int)vertices.size() - 1;
}

void DualGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= (int)vertices.size() || b >= (int)vertices.size())
    throw std::out_of_range("DualGraph::add_edge: no such vertex");
  if (a > b) std::swap(a, b);
  edges.emplace_back(a, b);
}

namespace {
int find_root(std::vector<int>& up, int a) {
  while (up[a] != a) a = up[a] = up[up[a]];
  return a;
}
}  // namespace

GraphInvariants graph_invariants(const DualGraph& g) {
  int v = g.num_vertices();
  std::vector<int> up(v);
  std::iota(up.begin(), up.end(), 0);
  for (auto& e : g.edges) {
    int a = find_root(up, e.first), b = find_root(up, e.second);
    if (a != b) up[a] = b;
  }
  int comps = 0;
  for (int i = 0; i < v; ++i)
    if (find_root(up, i) == i) ++comps;
  GraphInvariants r;
  r.components = comps;
  r.betti1 = g.num_edges() - v + comps;
  return r;
}

bool is_tree(const DualGraph& g) {
  auto inv = graph_invariants(g);
  return inv.components == 1 && inv.betti1 == 0;
}

std::string to_dot(const DualGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int i = 0; i < g.num_vertices(); ++i) {
    const auto& v = g.vertices[i];
    os << "  v" << i << " [label=\"";
    if (!v.label.empty()) os << v.label;
    if (v.kind != VertexKind::Affine) os << (v.label.empty() ? "" : " ") << "+" << v.multiplicity;
    os << "\", shape=";
    switch (v.kind) {
      case VertexKind::Affine: os << "circle"; break;
      case VertexKind::Divisor: os << "box"; break;
      case VertexKind::Dicritical: os << "diamond"; break;
    }
    os << "];\n";
  }
  for (auto& e : g.edges) os << "  v" << e.first << " -- v" << e.second << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace polyfib
