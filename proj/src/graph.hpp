// Dual graphs of curve configurations: multigraphs with loops, vertex kinds
// (affine component, divisor component, dicritical), multiplicities, and the
// generic invariants (connected components, first Betti number).

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace polyfib {

enum class VertexKind { Affine, Divisor, Dicritical };

struct GraphVertex {
  VertexKind kind = VertexKind::Affine;
  int multiplicity = 0;  // >= 1 for divisor kinds, 0 (absent) for affine
  std::string label;
};

struct DualGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // unordered; loops allowed

  int add_vertex(VertexKind k, int mult = 0, std::string label = "");
  void add_edge(int a, int b);
  int num_vertices() const { return (int)vertices.size(); }
  int num_edges() const { return (int)edges.size(); }
};

struct GraphInvariants {
  int components = 0;
  int betti1 = 0;  // E - V + C
};

GraphInvariants graph_invariants(const DualGraph& g);

bool is_tree(const DualGraph& g);

// Deterministic DOT serialization.
std::string to_dot(const DualGraph& g, const std::string& name);

}  // namespace polyfib
