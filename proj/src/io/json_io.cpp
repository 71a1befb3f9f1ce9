#include "lamanchiral/io/json_io.hpp"

#include <fstream>
#include <set>

#include "lamanchiral/errors.hpp"

namespace lamanchiral::io {

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(where + ": missing field \"" + name + "\"");
  return *it;
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) throw InvalidInput(where + ": expected a string, got " + j.dump());
  std::string s = j.get<std::string>();
  if (s.empty()) throw InvalidInput(where + ": empty identifier");
  return s;
}

std::pair<std::string, std::string> pair_at(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput(where + ": expected a two-element array");
  return {string_at(j[0], where + "[0]"), string_at(j[1], where + "[1]")};
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

graphs::DirectedGraph parse_graph(const json& j) {
  const json& vs = field(j, "vertices", "graph");
  const json& es = field(j, "edges", "graph");
  if (!vs.is_array()) throw InvalidInput("graph.vertices: expected an array");
  if (!es.is_array()) throw InvalidInput("graph.edges: expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    vertices.push_back(string_at(vs[i], "graph.vertices[" + std::to_string(i) + "]"));
  std::vector<graphs::DirectedEdge> edges;
  for (std::size_t k = 0; k < es.size(); ++k) {
    std::string where = "graph.edges[" + std::to_string(k) + "]";
    edges.push_back({string_at(field(es[k], "id", where), where + ".id"),
                     string_at(field(es[k], "tail", where), where + ".tail"),
                     string_at(field(es[k], "head", where), where + ".head")});
  }
  return graphs::DirectedGraph(std::move(vertices), std::move(edges));
}

laman::SimpleGraph to_simple_graph(const graphs::DirectedGraph& g) {
  std::vector<laman::Edge> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.tail, e.head);
  return laman::SimpleGraph(g.vertices(), edges);
}

graphs::EdgeWeights parse_weights(const json& j, const graphs::DirectedGraph& g) {
  if (!j.is_object()) throw InvalidInput("weights: expected an object");
  graphs::EdgeWeights w;
  for (const auto& [id, value] : j.items()) {
    std::string where = "weights." + id;
    g.edge_index(id);
    std::string text = string_at(value, where);
    if (text == "t")
      w.set_symbolic(id);
    else {
      alg::Rational q;
      try {
        q = alg::parse_rational(text);
      } catch (const InvalidInput& e) {
        throw InvalidInput(where + ": " + e.what());
      }
      if (q <= 0) throw InvalidInput(where + ": weight must be positive, got " + text);
      w.set(id, q);
    }
  }
  w.check(g);
  return w;
}

laman::HennebergSequence parse_sequence(const json& j) {
  laman::HennebergSequence seq;
  std::tie(seq.o, seq.v) = pair_at(field(j, "base", "sequence"), "sequence.base");
  const json& moves = field(j, "moves", "sequence");
  if (!moves.is_array()) throw InvalidInput("sequence.moves: expected an array");
  for (std::size_t k = 0; k < moves.size(); ++k) {
    std::string where = "sequence.moves[" + std::to_string(k) + "]";
    seq.moves.push_back({pair_at(field(moves[k], "parent", where), where + ".parent"),
                         string_at(field(moves[k], "new", where), where + ".new")});
  }
  return seq;
}

json sequence_to_json(const laman::HennebergSequence& seq) {
  json moves = json::array();
  for (const auto& m : seq.moves)
    moves.push_back({{"parent", {m.parent.first, m.parent.second}}, {"new", m.fresh}});
  return {{"base", {seq.o, seq.v}}, {"moves", moves}};
}

json poly_to_json(const alg::Poly& p) {
  json j = json::object();
  for (const auto& t : p.terms()) j[t.mono.to_string()] = alg::to_string(t.coeff);
  return j;
}

}  // namespace lamanchiral::io
