#pragma once

#include <string>

#include <json.hpp>

#include "lamanchiral/alg/poly.hpp"
#include "lamanchiral/graphs/laplacian.hpp"
#include "lamanchiral/laman/laman.hpp"

// JSON schemas:
//   graph     {"vertices":["1","2"],"edges":[{"id":"e1","tail":"1","head":"2"}]}
//   weights   {"e1":"3/2","e2":"t"}
//   sequence  {"base":["o","1"],"moves":[{"parent":["1","o"],"new":"2"}]}
// Parse failures throw InvalidInput naming the offending field.
namespace lamanchiral::io {

using nlohmann::json;

json read_json_file(const std::string& path);

graphs::DirectedGraph parse_graph(const json& j);
laman::SimpleGraph to_simple_graph(const graphs::DirectedGraph& g);
graphs::EdgeWeights parse_weights(const json& j, const graphs::DirectedGraph& g);
laman::HennebergSequence parse_sequence(const json& j);
json sequence_to_json(const laman::HennebergSequence& seq);

// {"<monomial>": "<p/q>"} with keys in byte order.
json poly_to_json(const alg::Poly& p);

}  // namespace lamanchiral::io
