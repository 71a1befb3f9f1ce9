#include "lamanchiral/laman/laman.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>

#include "lamanchiral/errors.hpp"
#include "lamanchiral/limits.hpp"

namespace lamanchiral::laman {

Edge make_edge(const std::string& a, const std::string& b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

SimpleGraph::SimpleGraph(const std::vector<std::string>& vertices, const std::vector<Edge>& edges) {
  for (const auto& v : vertices) add_vertex(v);
  for (const auto& [a, b] : edges) {
    if (has_edge(a, b)) throw InvalidInput("parallel edge {" + a + "," + b + "}");
    add_edge(a, b);
  }
}

bool SimpleGraph::has_edge(const std::string& a, const std::string& b) const {
  return edges_.count(make_edge(a, b)) > 0;
}

std::vector<std::string> SimpleGraph::neighbors(const std::string& v) const {
  std::vector<std::string> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SimpleGraph::add_vertex(const std::string& v) {
  if (!vertices_.insert(v).second) throw DuplicateVertex("vertex \"" + v + "\" already present");
}

void SimpleGraph::add_edge(const std::string& a, const std::string& b) {
  if (a == b) throw SelfLoop("self-loop at \"" + a + "\"");
  for (const auto& x : {a, b})
    if (!has_vertex(x)) throw MissingVertex("unknown vertex \"" + x + "\"");
  edges_.insert(make_edge(a, b));
}

void SimpleGraph::remove_edge(const std::string& a, const std::string& b) {
  if (!edges_.erase(make_edge(a, b))) throw MissingEdge("no edge {" + a + "," + b + "}");
}

void SimpleGraph::remove_vertex(const std::string& v) {
  if (!vertices_.erase(v)) throw MissingVertex("unknown vertex \"" + v + "\"");
  std::erase_if(edges_, [&](const Edge& e) { return e.first == v || e.second == v; });
}

SimpleGraph SimpleGraph::induced(const std::vector<std::string>& keep) const {
  SimpleGraph h;
  for (const auto& v : keep) h.add_vertex(v);
  for (const auto& e : edges_)
    if (h.has_vertex(e.first) && h.has_vertex(e.second)) h.edges_.insert(e);
  return h;
}

LamanReport is_laman(const SimpleGraph& g) {
  const std::size_t n = g.vertices().size();
  if (n < 2) throw TooFewVertices("Laman check needs at least 2 vertices, got " + std::to_string(n));
  const std::size_t cap = std::max<std::size_t>(12, Limits::from_env().max_vertices);
  if (n > cap)
    throw InvalidInput("Laman check is exhaustive; " + std::to_string(n) + " vertices exceeds " +
                       std::to_string(cap) + " (set LAMANCHIRAL_MAX_VERTICES)");
  std::vector<std::string> vs(g.vertices().begin(), g.vertices().end());
  auto bound = [](std::size_t k) { return 2 * static_cast<long>(k) - 3; };
  auto count = [](const char* prime, long e, const char* rel, long b) {
    return std::string("|E") + prime + "|=" + std::to_string(e) + " " + rel + " 2|V" + prime +
           "|-3=" + std::to_string(b);
  };

  LamanReport r;
  long e = static_cast<long>(g.edges().size());
  if (e != bound(n)) {
    r.witness = vs;
    r.reason = count("", e, e > bound(n) ? ">" : "<", bound(n));
    return r;
  }
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[vs[i]] = i;
  std::vector<std::uint32_t> edge_masks;
  for (const auto& [a, b] : g.edges()) edge_masks.push_back(1u << pos[a] | 1u << pos[b]);
  // Proper subsets in increasing size, so the reported witness is a smallest one.
  for (std::size_t size = 2; size < n; ++size)
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (static_cast<std::size_t>(__builtin_popcount(s)) != size) continue;
      long inside = std::count_if(edge_masks.begin(), edge_masks.end(),
                                  [s](std::uint32_t m) { return (m & s) == m; });
      if (inside > bound(size)) {
        for (std::size_t i = 0; i < n; ++i)
          if (s >> i & 1u) r.witness.push_back(vs[i]);
        std::string names;
        for (const auto& v : r.witness) names += (names.empty() ? "" : ",") + v;
        r.reason = "subgraph {" + names + "} has " + count("'", inside, ">", bound(size));
        return r;
      }
    }
  r.laman = true;
  return r;
}

SimpleGraph apply_henneberg(const SimpleGraph& g, HennebergType type, const HennebergArgs& args) {
  SimpleGraph h = g;
  auto need_vertex = [&](const std::string& v) {
    if (!g.has_vertex(v)) throw MissingVertex("unknown vertex \"" + v + "\"");
  };
  auto need_edge = [&] {
    if (!g.has_edge(args.a, args.b)) throw MissingEdge("no edge {" + args.a + "," + args.b + "}");
  };
  switch (type) {
    case HennebergType::I:
      need_vertex(args.a);
      need_vertex(args.b);
      if (args.a == args.b) throw InvalidInput("Henneberg I needs two distinct vertices");
      break;
    case HennebergType::IPrime:
      need_edge();
      break;
    case HennebergType::II:
      need_edge();
      need_vertex(args.c);
      if (args.c == args.a || args.c == args.b)
        throw InvalidInput("Henneberg II third vertex must differ from the edge ends");
      h.remove_edge(args.a, args.b);
      break;
  }
  if (g.has_vertex(args.fresh)) throw DuplicateVertex("vertex \"" + args.fresh + "\" already present");
  h.add_vertex(args.fresh);
  h.add_edge(args.fresh, args.a);
  h.add_edge(args.fresh, args.b);
  if (type == HennebergType::II) h.add_edge(args.fresh, args.c);
  return h;
}

SimpleGraph realize(const HennebergSequence& seq) {
  if (seq.o == seq.v) throw SelfLoop("base edge is a self-loop at \"" + seq.o + "\"");
  SimpleGraph g({seq.o, seq.v}, {{seq.v, seq.o}});
  for (std::size_t k = 0; k < seq.moves.size(); ++k) {
    const auto& m = seq.moves[k];
    std::string where = "move " + std::to_string(k + 1) + ": ";
    if (!g.has_edge(m.parent.first, m.parent.second))
      throw MissingEdge(where + "parent edge {" + m.parent.first + "," + m.parent.second + "} not present");
    if (g.has_vertex(m.fresh)) throw DuplicateVertex(where + "vertex \"" + m.fresh + "\" is not fresh");
    g = apply_henneberg(g, HennebergType::IPrime, {m.parent.first, m.parent.second, {}, m.fresh});
  }
  return g;
}

namespace {

struct ReverseSearch {
  std::string o, v;
  std::set<std::set<std::string>> dead;
  std::vector<std::pair<std::string, Edge>> removed;  // (vertex, its neighbors), last move first

  bool run(const SimpleGraph& g) {
    if (g.vertices().size() == 2) return true;
    if (dead.count(g.vertices())) return false;
    for (const auto& u : g.vertices()) {
      if (u == o || u == v) continue;
      auto nb = g.neighbors(u);
      if (nb.size() != 2 || !g.has_edge(nb[0], nb[1])) continue;
      SimpleGraph h = g;
      h.remove_vertex(u);
      removed.emplace_back(u, Edge{nb[0], nb[1]});
      if (run(h)) return true;
      removed.pop_back();
    }
    dead.insert(g.vertices());
    return false;
  }
};

}  // namespace

HennebergSequence find_type1prime_sequence(const SimpleGraph& g, const std::string& o, const Edge& e) {
  if (e.first != o && e.second != o)
    throw InvalidInput("base vertex \"" + o + "\" is not an end of the base edge");
  const std::string& v = e.first == o ? e.second : e.first;
  if (!g.has_edge(o, v)) throw MissingEdge("no edge {" + o + "," + v + "}");
  auto report = is_laman(g);
  if (!report.laman) throw NotTypeIPrime("graph is not Laman: " + report.reason);

  ReverseSearch search{o, v, {}, {}};
  if (!search.run(g))
    throw NotTypeIPrime("no Type I' construction from base (" + o + ", {" + e.first + "," + e.second + "})");

  HennebergSequence seq{o, v, {}};
  std::map<std::string, std::size_t> born{{o, 0}, {v, 0}};
  for (auto it = search.removed.rbegin(); it != search.removed.rend(); ++it) {
    auto [a, b] = it->second;
    // Orientation: o last, otherwise the vertex created later first.
    if (a == o || (b != o && born[a] < born[b])) std::swap(a, b);
    seq.moves.push_back({{a, b}, it->first});
    born[it->first] = seq.moves.size();
  }
  return seq;
}

HennebergSequence random_type1prime_sequence(std::size_t vertices, std::uint64_t seed) {
  if (vertices < 2) throw TooFewVertices("a sequence needs at least 2 vertices");
  std::mt19937_64 rng(seed);
  HennebergSequence seq{"o", "1", {}};
  std::vector<Edge> edges{{"1", "o"}};
  for (std::size_t k = 2; k < vertices; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    Edge parent = edges[pick(rng)];
    std::string fresh = std::to_string(k);
    seq.moves.push_back({parent, fresh});
    edges.push_back({fresh, parent.first});
    edges.push_back({fresh, parent.second});
  }
  return seq;
}

}  // namespace lamanchiral::laman
