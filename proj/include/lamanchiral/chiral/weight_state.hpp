#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamanchiral/alg/poly.hpp"
#include "lamanchiral/laman/laman.hpp"

namespace lamanchiral::chiral {

using alg::Poly;
using alg::Var;

struct OrientedEdge {
  std::string tail, head;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

// The pair (W, G) of the recursion for a Type I' graph.
//   W = sum_{v != o} sum_e (lambda_v | f(v, e) zf_e)
// Edges keep their creation orientation: the base edge is v -> o and each
// move adds (new, i) and (new, j).
class WeightState {
 public:
  static WeightState base(const std::string& o, const std::string& v);

  // Henneberg I' on the unordered parent edge {a, b}.
  WeightState extend(const laman::Edge& parent, const std::string& fresh) const;

  const std::string& o() const { return o_; }
  const std::vector<std::string>& vertices() const { return vertices_; }  // without o, creation order
  const std::vector<OrientedEdge>& edges() const { return edges_; }
  int moves() const { return moves_; }
  // G is kept as a product of one factor per move, each already shifted by
  // the later moves; G() expands it on first use.
  const std::vector<Poly>& G_factors() const { return g_factors_; }
  const Poly& G() const;

  // f(v, e) for the stored orientation of e; the reversed orientation negates.
  Poly f(const std::string& v, const OrientedEdge& e) const;
  Poly W() const;
  std::vector<Var> box_vars() const;

  // sum_{e containing v} rho(e, v) f(v', e) = -delta(v, v') for all v, v' != o.
  // On failure returns a description of the first bad identity.
  std::string momentum_defect() const;

 private:
  std::size_t edge_index(const std::string& a, const std::string& b, int* sign) const;

  std::string o_;
  std::vector<std::string> vertices_;
  std::vector<OrientedEdge> edges_;
  std::map<std::string, std::vector<Poly>> f_;  // vertex -> coefficient per edge
  std::vector<Poly> g_factors_;
  mutable std::optional<Poly> g_;
  int moves_ = 0;
};

WeightState build_state(const laman::HennebergSequence& seq);

// Box variables of move k (1-based) are r_{k+1}, s_{k+1}.
Var box_r_for_move(int k);
Var box_s_for_move(int k);

}  // namespace lamanchiral::chiral
