#include "lamanchiral/chiral/weight_state.hpp"

#include <algorithm>

#include "lamanchiral/errors.hpp"

namespace lamanchiral::chiral {

using alg::lambda_vec;
using alg::Vec2;

Var box_r_for_move(int k) { return Var::box_r(k + 1); }
Var box_s_for_move(int k) { return Var::box_s(k + 1); }

WeightState WeightState::base(const std::string& o, const std::string& v) {
  if (o == v) throw DuplicateVertex("base edge needs two distinct vertices, got \"" + o + "\" twice");
  WeightState s;
  s.o_ = o;
  s.vertices_ = {v};
  s.edges_ = {{v, o}};
  s.f_[v] = {Poly(-1)};
  return s;
}

std::size_t WeightState::edge_index(const std::string& a, const std::string& b, int* sign) const {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].tail == a && edges_[k].head == b) {
      if (sign) *sign = 1;
      return k;
    }
    if (edges_[k].tail == b && edges_[k].head == a) {
      if (sign) *sign = -1;
      return k;
    }
  }
  throw MissingParentEdge("no edge {" + a + "," + b + "} in the weight state");
}

WeightState WeightState::extend(const laman::Edge& parent, const std::string& fresh) const {
  if (fresh == o_ || f_.count(fresh))
    throw DuplicateVertex("vertex \"" + fresh + "\" is not fresh");
  const std::size_t p = edge_index(parent.first, parent.second, nullptr);
  const std::string i = edges_[p].tail, j = edges_[p].head;
  const bool internal = j != o_;
  const int k = moves_ + 1;
  const Poly r(box_r_for_move(k)), s(box_s_for_move(k));
  const Poly one_r = Poly(1) - r, one_s = Poly(1) - s;
  const Vec2 lam_new = lambda_vec(fresh);

  WeightState next = *this;
  next.moves_ = k;
  next.vertices_.push_back(fresh);

  // G factor (d_{zf_ij} W) ∧ lambda_new, read off the old f column of the parent.
  // The base edge is differentiated in the o -> v orientation.
  Poly factor;
  for (const auto& v : vertices_) factor += f_.at(v)[p] * alg::wedge2(lambda_vec(v), lam_new);
  if (p == 0) factor = -factor;
  std::map<Var, Poly> shift;
  for (int c = 1; c <= 2; ++c) {
    shift[Var::lambda(i, c)] = Poly(Var::lambda(i, c)) + one_s * lam_new[c - 1];
    if (internal) shift[Var::lambda(j, c)] = Poly(Var::lambda(j, c)) + s * lam_new[c - 1];
  }
  for (auto& g : next.g_factors_) g = g.substitute(shift);
  next.g_factors_.push_back(factor * r);
  next.g_.reset();

  // zf substitution on the parent edge: zf_ij -> r zf_ij + (1-r)(zf_*j - zf_*i).
  const std::size_t e_i = edges_.size(), e_j = edges_.size() + 1;
  next.edges_.push_back({fresh, i});
  next.edges_.push_back({fresh, j});
  for (auto& [v, row] : next.f_) {
    Poly old = row[p];
    row[p] = r * old;
    row.push_back(-(one_r * old));
    row.push_back(one_r * old);
  }
  // lambda substitution: the new row collects (1-s) row_i + s row_j.
  std::vector<Poly> row_new(next.edges_.size());
  const auto& row_i = next.f_.at(i);
  for (std::size_t e = 0; e < row_new.size(); ++e) {
    row_new[e] = one_s * row_i[e];
    if (internal) row_new[e] += s * next.f_.at(j)[e];
  }
  row_new[e_i] -= one_s;
  row_new[e_j] -= s;
  next.f_[fresh] = std::move(row_new);
  return next;
}

const Poly& WeightState::G() const {
  if (!g_) {
    Poly g(1);
    for (const auto& factor : g_factors_) g = g * factor;
    g_ = std::move(g);
  }
  return *g_;
}

Poly WeightState::f(const std::string& v, const OrientedEdge& e) const {
  int sign = 1;
  std::size_t k = edge_index(e.tail, e.head, &sign);
  auto it = f_.find(v);
  if (it == f_.end()) throw MissingVertex("no vertex \"" + v + "\" (other than o) in the weight state");
  return sign > 0 ? it->second[k] : -it->second[k];
}

Poly WeightState::W() const {
  Poly w;
  for (const auto& v : vertices_) {
    const auto& row = f_.at(v);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (!row[e].is_zero())
        w += row[e] * alg::dot2(lambda_vec(v), alg::zfrak_vec(edges_[e].tail, edges_[e].head));
  }
  return w;
}

std::vector<Var> WeightState::box_vars() const {
  std::vector<Var> vs;
  for (int k = 1; k <= moves_; ++k) {
    vs.push_back(box_r_for_move(k));
    vs.push_back(box_s_for_move(k));
  }
  return vs;
}

std::string WeightState::momentum_defect() const {
  for (const auto& v : vertices_)
    for (const auto& vp : vertices_) {
      Poly sum;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].tail == v) sum += f_.at(vp)[e];
        if (edges_[e].head == v) sum -= f_.at(vp)[e];
      }
      Poly expected = v == vp ? Poly(-1) : Poly();
      if (!(sum == expected))
        return "vertex " + v + ", row " + vp + ": sum = " + sum.to_string() + ", expected " + expected.to_string();
    }
  return {};
}

WeightState build_state(const laman::HennebergSequence& seq) {
  laman::realize(seq);
  WeightState s = WeightState::base(seq.o, seq.v);
  for (const auto& m : seq.moves) s = s.extend(m.parent, m.fresh);
  return s;
}

}  // namespace lamanchiral::chiral
