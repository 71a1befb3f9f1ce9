#pragma once

#include <map>
#include <string>
#include <vector>

#include "lamanchiral/alg/matrix.hpp"

namespace lamanchiral::graphs {

struct DirectedEdge {
  std::string id, tail, head;
};

// Multigraph with ordered vertices and ordered directed edges; no self-loops.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::vector<std::string> vertices, std::vector<DirectedEdge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  std::size_t vertex_index(const std::string& v) const;
  std::size_t edge_index(const std::string& id) const;
  bool is_connected() const;
  void require_connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<DirectedEdge> edges_;
  std::map<std::string, std::size_t> vertex_pos_, edge_pos_;
};

using EdgeSet = std::vector<std::string>;

// rho(e, i): +1 at the tail, -1 at the head.
alg::Matrix<int> incidence_matrix(const DirectedGraph& g);

// Edge subsets of size |V|-1 that span without cycles, in lexicographic order of edge positions.
std::vector<EdgeSet> spanning_trees(const DirectedGraph& g);

// Minimal edge sets whose removal leaves exactly two trees, one containing
// v1 and the other v2. Exhaustive over subsets; at most max_cut_edges edges.
std::vector<EdgeSet> cut_sets(const DirectedGraph& g, const std::vector<std::string>& v1,
                              const std::vector<std::string>& v2);

inline constexpr std::size_t max_cut_edges = 16;

}  // namespace lamanchiral::graphs
