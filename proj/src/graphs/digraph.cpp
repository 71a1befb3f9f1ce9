#include "lamanchiral/graphs/digraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "lamanchiral/errors.hpp"

namespace lamanchiral::graphs {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

struct Endpoints {
  std::size_t tail, head;
};

std::vector<Endpoints> endpoints(const DirectedGraph& g) {
  std::vector<Endpoints> out;
  for (const auto& e : g.edges()) out.push_back({g.vertex_index(e.tail), g.vertex_index(e.head)});
  return out;
}

EdgeSet ids_of(const DirectedGraph& g, std::uint64_t mask) {
  EdgeSet s;
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    if (mask >> k & 1u) s.push_back(g.edges()[k].id);
  return s;
}

// Component label per vertex of the graph restricted to the edges in mask;
// returns the number of components and whether each component is a tree.
struct Forest {
  std::vector<std::size_t> label;
  std::size_t components = 0;
  bool acyclic = true;
};

Forest components(std::size_t n, const std::vector<Endpoints>& ends, std::uint64_t mask) {
  UnionFind uf(n);
  Forest f;
  for (std::size_t k = 0; k < ends.size(); ++k)
    if (mask >> k & 1u)
      if (!uf.unite(ends[k].tail, ends[k].head)) f.acyclic = false;
  f.label.resize(n);
  std::vector<std::size_t> root_label(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = uf.find(v);
    if (root_label[r] == n) root_label[r] = f.components++;
    f.label[v] = root_label[r];
  }
  return f;
}

}  // namespace

DirectedGraph::DirectedGraph(std::vector<std::string> vertices, std::vector<DirectedEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!vertex_pos_.emplace(vertices_[i], i).second)
      throw DuplicateVertex("duplicate vertex \"" + vertices_[i] + "\"");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (!edge_pos_.emplace(e.id, k).second) throw InvalidInput("duplicate edge id \"" + e.id + "\"");
    if (!vertex_pos_.count(e.tail)) throw MissingVertex("edge " + e.id + ": unknown tail \"" + e.tail + "\"");
    if (!vertex_pos_.count(e.head)) throw MissingVertex("edge " + e.id + ": unknown head \"" + e.head + "\"");
    if (e.tail == e.head) throw SelfLoop("edge " + e.id + " is a self-loop at \"" + e.tail + "\"");
  }
}

std::size_t DirectedGraph::vertex_index(const std::string& v) const {
  auto it = vertex_pos_.find(v);
  if (it == vertex_pos_.end()) throw MissingVertex("unknown vertex \"" + v + "\"");
  return it->second;
}

std::size_t DirectedGraph::edge_index(const std::string& id) const {
  auto it = edge_pos_.find(id);
  if (it == edge_pos_.end()) throw MissingEdge("unknown edge \"" + id + "\"");
  return it->second;
}

bool DirectedGraph::is_connected() const {
  if (vertices_.empty()) return false;
  UnionFind uf(vertices_.size());
  std::size_t parts = vertices_.size();
  for (const auto& e : edges_)
    if (uf.unite(vertex_index(e.tail), vertex_index(e.head))) --parts;
  return parts == 1;
}

void DirectedGraph::require_connected() const {
  if (!is_connected()) throw DisconnectedGraph("graph is not connected");
}

alg::Matrix<int> incidence_matrix(const DirectedGraph& g) {
  alg::Matrix<int> rho(g.edges().size(), g.vertices().size(), 0);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    rho(k, g.vertex_index(g.edges()[k].tail)) = 1;
    rho(k, g.vertex_index(g.edges()[k].head)) = -1;
  }
  return rho;
}

std::vector<EdgeSet> spanning_trees(const DirectedGraph& g) {
  g.require_connected();
  const std::size_t n = g.vertices().size(), m = g.edges().size();
  auto ends = endpoints(g);
  std::vector<EdgeSet> trees;
  // Choose n-1 of m edges in lexicographic order of positions.
  std::vector<std::size_t> pick(n - 1);
  std::iota(pick.begin(), pick.end(), 0);
  if (n - 1 > m) return trees;
  while (true) {
    UnionFind uf(n);
    bool ok = true;
    for (std::size_t k : pick) ok = ok && uf.unite(ends[k].tail, ends[k].head);
    if (ok) {
      EdgeSet s;
      for (std::size_t k : pick) s.push_back(g.edges()[k].id);
      trees.push_back(std::move(s));
    }
    std::size_t r = pick.size();
    while (r > 0 && pick[r - 1] == m - pick.size() + r - 1) --r;
    if (r == 0) break;
    ++pick[r - 1];
    for (std::size_t q = r; q < pick.size(); ++q) pick[q] = pick[q - 1] + 1;
  }
  return trees;
}

std::vector<EdgeSet> cut_sets(const DirectedGraph& g, const std::vector<std::string>& v1,
                              const std::vector<std::string>& v2) {
  g.require_connected();
  const std::size_t n = g.vertices().size(), m = g.edges().size();
  if (v1.empty() || v2.empty()) throw InvalidInput("cut_sets: vertex sets must be nonempty");
  if (m > max_cut_edges) throw InvalidInput("cut_sets: more than " + std::to_string(max_cut_edges) + " edges");
  std::vector<std::size_t> a, b;
  for (const auto& v : v1) a.push_back(g.vertex_index(v));
  for (const auto& v : v2) b.push_back(g.vertex_index(v));
  for (std::size_t x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      throw InvalidInput("cut_sets: vertex sets overlap");
  auto ends = endpoints(g);
  const std::uint64_t all = m == 64 ? ~0ull : (1ull << m) - 1;

  // Property 1 for a removed set C: what remains is two trees splitting a from b.
  auto separates = [&](std::uint64_t removed) {
    Forest f = components(n, ends, all & ~removed);
    if (f.components != 2 || !f.acyclic) return false;
    std::size_t side = f.label[a.front()];
    for (std::size_t x : a)
      if (f.label[x] != side) return false;
    for (std::size_t x : b)
      if (f.label[x] == side) return false;
    return true;
  };

  std::vector<std::uint64_t> found;
  for (std::uint64_t c = 1; c <= all; ++c) {
    if (!separates(c)) continue;
    // Property 2: no proper nonempty subset also works.
    bool minimal = true;
    for (std::uint64_t s = (c - 1) & c; s && minimal; s = (s - 1) & c) minimal = !separates(s);
    if (minimal) found.push_back(c);
  }
  auto positions = [m](std::uint64_t mask) {
    std::vector<std::size_t> p;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1u) p.push_back(k);
    return p;
  };
  std::sort(found.begin(), found.end(), [&](std::uint64_t x, std::uint64_t y) {
    int px = std::popcount(x), py = std::popcount(y);
    if (px != py) return px < py;
    return positions(x) < positions(y);
  });
  std::vector<EdgeSet> out;
  for (auto c : found) out.push_back(ids_of(g, c));
  return out;
}

}  // namespace lamanchiral::graphs
