#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lamanchiral::laman {

using Edge = std::pair<std::string, std::string>;

// Undirected simple graph. Edges are stored with the smaller id first.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(const std::vector<std::string>& vertices, const std::vector<Edge>& edges);

  const std::set<std::string>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_vertex(const std::string& v) const { return vertices_.count(v) > 0; }
  bool has_edge(const std::string& a, const std::string& b) const;
  std::vector<std::string> neighbors(const std::string& v) const;

  void add_vertex(const std::string& v);
  void add_edge(const std::string& a, const std::string& b);
  void remove_edge(const std::string& a, const std::string& b);
  void remove_vertex(const std::string& v);
  SimpleGraph induced(const std::vector<std::string>& keep) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::set<std::string> vertices_;
  std::set<Edge> edges_;
};

Edge make_edge(const std::string& a, const std::string& b);

struct LamanReport {
  bool laman = false;
  std::vector<std::string> witness;  // violating vertex set when not Laman
  std::string reason;                // e.g. "|E|=6 > 2|V|-3=5"
};

// Exhaustive over induced subgraphs.
LamanReport is_laman(const SimpleGraph& g);

enum class HennebergType { I, IPrime, II };

struct HennebergArgs {
  std::string a, b;  // I: the two vertices; I' and II: the edge
  std::string c;     // II only: the third vertex
  std::string fresh;
};

SimpleGraph apply_henneberg(const SimpleGraph& g, HennebergType type, const HennebergArgs& args);

struct Move {
  Edge parent;  // unordered; kept in creation orientation (newer vertex first, o last)
  std::string fresh;
};

struct HennebergSequence {
  std::string o, v;  // base edge, stored v -> o
  std::vector<Move> moves;
};

SimpleGraph realize(const HennebergSequence& seq);

// Reverse search for a Type I' construction from base (o, e). Candidates are
// tried in lexicographic order, depth first. Throws NotTypeIPrime.
HennebergSequence find_type1prime_sequence(const SimpleGraph& g, const std::string& o, const Edge& e);

// Base ("o", "1"), then vertices "2".."n-1", each splitting a uniformly chosen
// current edge. Parents follow the orientation convention of Move.
HennebergSequence random_type1prime_sequence(std::size_t vertices, std::uint64_t seed);

}  // namespace lamanchiral::laman
