#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lamanchiral/alg/extform.hpp"
#include "lamanchiral/graphs/digraph.hpp"
#include "lamanchiral/graphs/laplacian.hpp"

namespace lamanchiral::testing {

using Rng = std::mt19937_64;

alg::Rational random_rational(Rng& rng, int bound = 5);
alg::Rational random_positive_rational(Rng& rng, int bound = 9);

// Up to max_terms terms of degree <= max_degree over a fixed pool of
// lambda, zf, box and weight variables.
alg::Poly random_poly(Rng& rng, int max_terms = 4, unsigned max_degree = 3);

// Small sums of products of x, dx, z, zbar generators on vertices 1 and 2.
alg::ExtForm random_jouanolou_element(Rng& rng);

// Every connected multigraph on vertices 1..n (2 <= n <= max_vertices) with at most
// max_edges edges, up to relabeling of parallel copies. Parallel copies alternate orientation.
std::vector<graphs::DirectedGraph> graph_catalog(std::size_t max_vertices = 4, std::size_t max_edges = 6);

// Connected: a random spanning tree plus extra random edges, random orientations.
graphs::DirectedGraph random_graph(Rng& rng, std::size_t max_vertices = 5, std::size_t max_edges = 7);

graphs::EdgeWeights random_weights(Rng& rng, const graphs::DirectedGraph& g);

}  // namespace lamanchiral::testing
