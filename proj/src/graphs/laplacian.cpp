#include "lamanchiral/graphs/laplacian.hpp"

#include <algorithm>

#include "lamanchiral/errors.hpp"

namespace lamanchiral::graphs {

namespace {

RatFun reciprocal(const Poly& t) { return RatFun::quotient(Poly(1), t); }

Poly weight_product(const EdgeWeights& w, const EdgeSet& edges, const std::string& skip = {}) {
  Poly p(1);
  for (const auto& e : edges)
    if (e != skip) p *= w.at(e);
  return p;
}

Matrix<RatFun> laplacian(const DirectedGraph& g, const EdgeWeights& w, std::size_t keep) {
  g.require_connected();
  w.check(g);
  auto rho = incidence_matrix(g);
  Matrix<RatFun> m(keep, keep);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    RatFun inv_t = reciprocal(w.at(g.edges()[k].id));
    for (std::size_t i = 0; i < keep; ++i) {
      if (rho(k, i) == 0) continue;
      for (std::size_t j = 0; j < keep; ++j)
        if (rho(k, j) != 0) m(i, j) += RatFun(rho(k, i) * rho(k, j)) * inv_t;
    }
  }
  return m;
}

// Cut sets, or nothing when the two vertex sets overlap.
std::vector<EdgeSet> cuts_or_empty(const DirectedGraph& g, std::vector<std::string> v1,
                                   std::vector<std::string> v2) {
  std::sort(v1.begin(), v1.end());
  v1.erase(std::unique(v1.begin(), v1.end()), v1.end());
  std::sort(v2.begin(), v2.end());
  v2.erase(std::unique(v2.begin(), v2.end()), v2.end());
  for (const auto& x : v1)
    if (std::binary_search(v2.begin(), v2.end(), x)) return {};
  return cut_sets(g, v1, v2);
}

}  // namespace

EdgeWeights EdgeWeights::symbolic(const DirectedGraph& g) {
  EdgeWeights w;
  for (const auto& e : g.edges()) w.set_symbolic(e.id);
  return w;
}

EdgeWeights EdgeWeights::uniform(const DirectedGraph& g, const alg::Rational& q) {
  EdgeWeights w;
  for (const auto& e : g.edges()) w.set(e.id, q);
  return w;
}

void EdgeWeights::set(const std::string& edge, const alg::Rational& q) {
  if (q <= 0) throw InvalidInput("weight of edge " + edge + " must be positive, got " + q.get_str());
  w_[edge] = Poly(q);
}

void EdgeWeights::set_symbolic(const std::string& edge) { w_[edge] = Poly(alg::Var::t(edge)); }

const Poly& EdgeWeights::at(const std::string& edge) const {
  auto it = w_.find(edge);
  if (it == w_.end()) throw MissingEdge("no weight for edge \"" + edge + "\"");
  return it->second;
}

void EdgeWeights::check(const DirectedGraph& g) const {
  for (const auto& e : g.edges()) at(e.id);
  for (const auto& [id, p] : w_) g.edge_index(id);
}

Matrix<RatFun> weighted_laplacian(const DirectedGraph& g, const EdgeWeights& w) {
  return laplacian(g, w, g.vertices().size() - 1);
}

Matrix<RatFun> full_laplacian(const DirectedGraph& g, const EdgeWeights& w) {
  return laplacian(g, w, g.vertices().size());
}

Poly tree_polynomial(const DirectedGraph& g, const EdgeWeights& w) {
  w.check(g);
  Poly k;
  for (const auto& tree : spanning_trees(g)) {
    EdgeSet rest;
    for (const auto& e : g.edges())
      if (std::find(tree.begin(), tree.end(), e.id) == tree.end()) rest.push_back(e.id);
    k += weight_product(w, rest);
  }
  return k;
}

RatFun kirchhoff_det(const DirectedGraph& g, const EdgeWeights& w) {
  Poly k = tree_polynomial(g, w);
  RatFun r(k);
  for (const auto& e : g.edges()) r *= reciprocal(w.at(e.id));
  return r;
}

Matrix<RatFun> laplacian_inverse_adjugate(const DirectedGraph& g, const EdgeWeights& w) {
  return alg::inverse(weighted_laplacian(g, w));
}

Matrix<RatFun> laplacian_inverse_cuts(const DirectedGraph& g, const EdgeWeights& w) {
  g.require_connected();
  w.check(g);
  const auto& vs = g.vertices();
  const std::size_t n = vs.size() - 1;
  Poly k = tree_polynomial(g, w);
  Matrix<RatFun> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly num;
      for (const auto& c : cuts_or_empty(g, {vs[i], vs[j]}, {vs.back()})) num += weight_product(w, c);
      inv(i, j) = RatFun::quotient(std::move(num), k);
    }
  return inv;
}

Matrix<RatFun> laplacian_inverse(const DirectedGraph& g, const EdgeWeights& w) {
  auto a = laplacian_inverse_adjugate(g, w);
  auto b = laplacian_inverse_cuts(g, w);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j)))
        throw VerificationFailure("laplacian inverse entry (" + g.vertices()[i] + "," + g.vertices()[j] +
                                  "): adjugate " + a(i, j).to_string() + " != cut formula " +
                                  b(i, j).to_string());
  return a;
}

Matrix<RatFun> green_function(const DirectedGraph& g, const EdgeWeights& w) {
  auto inv = laplacian_inverse_adjugate(g, w);
  auto rho = incidence_matrix(g);
  const std::size_t n = inv.rows();
  Matrix<RatFun> d(g.edges().size(), n);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    RatFun inv_t = reciprocal(w.at(g.edges()[k].id));
    for (std::size_t i = 0; i < n; ++i) {
      RatFun s;
      for (std::size_t j = 0; j < n; ++j)
        if (rho(k, j) != 0) s += RatFun(rho(k, j)) * inv(j, i);
      d(k, i) = inv_t * s;
    }
  }
  return d;
}

Matrix<RatFun> green_function_cuts(const DirectedGraph& g, const EdgeWeights& w) {
  g.require_connected();
  w.check(g);
  const auto& vs = g.vertices();
  const std::size_t n = vs.size() - 1;
  Poly k = tree_polynomial(g, w);
  Matrix<RatFun> d(g.edges().size(), n);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    for (std::size_t i = 0; i < n; ++i) {
      Poly num;
      for (const auto& c : cuts_or_empty(g, {vs[i], edge.tail}, {vs.back(), edge.head}))
        num += weight_product(w, c, edge.id);
      for (const auto& c : cuts_or_empty(g, {vs[i], edge.head}, {vs.back(), edge.tail}))
        num -= weight_product(w, c, edge.id);
      d(e, i) = RatFun::quotient(std::move(num), k);
    }
  }
  return d;
}

}  // namespace lamanchiral::graphs
