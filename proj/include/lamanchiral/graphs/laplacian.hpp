#pragma once

#include <map>
#include <string>

#include "lamanchiral/graphs/digraph.hpp"

namespace lamanchiral::graphs {

using alg::Matrix;
using alg::Poly;
using alg::RatFun;

// Edge id -> t_e, either a positive rational constant or the variable t_e.
class EdgeWeights {
 public:
  static EdgeWeights symbolic(const DirectedGraph& g);
  static EdgeWeights uniform(const DirectedGraph& g, const alg::Rational& q);

  void set(const std::string& edge, const alg::Rational& q);
  void set_symbolic(const std::string& edge);
  const Poly& at(const std::string& edge) const;
  // Throws if an edge of g has no weight or a weight names an unknown edge.
  void check(const DirectedGraph& g) const;

 private:
  std::map<std::string, Poly> w_;
};

// Rows and columns over all vertices but the last one.
Matrix<RatFun> weighted_laplacian(const DirectedGraph& g, const EdgeWeights& w);
// Same over all vertices; rows sum to zero.
Matrix<RatFun> full_laplacian(const DirectedGraph& g, const EdgeWeights& w);

// sum over spanning trees T of prod_{e not in T} t_e
Poly tree_polynomial(const DirectedGraph& g, const EdgeWeights& w);
RatFun kirchhoff_det(const DirectedGraph& g, const EdgeWeights& w);

Matrix<RatFun> laplacian_inverse_adjugate(const DirectedGraph& g, const EdgeWeights& w);
Matrix<RatFun> laplacian_inverse_cuts(const DirectedGraph& g, const EdgeWeights& w);
// Both paths; throws VerificationFailure naming the first entry where they differ.
Matrix<RatFun> laplacian_inverse(const DirectedGraph& g, const EdgeWeights& w);

// d^{-1}(e, i) = sum_j (1/t_e) rho(e, j) M^{-1}(j, i), i over all vertices but the last.
Matrix<RatFun> green_function(const DirectedGraph& g, const EdgeWeights& w);
// The cut-difference form of the same matrix.
Matrix<RatFun> green_function_cuts(const DirectedGraph& g, const EdgeWeights& w);

}  // namespace lamanchiral::graphs
