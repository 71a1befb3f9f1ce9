#pragma once

#include <map>
#include <string>
#include <vector>

#include "lamanchiral/alg/ratfun.hpp"

namespace lamanchiral::alg {

// Word of degree-1 generators d(v), strictly increasing in the Var order.
using Word = std::vector<Var>;

// Element of (rational functions) ⊗ (exterior algebra on the d(v)).
class ExtForm {
 public:
  ExtForm() = default;
  ExtForm(RatFun scalar);
  ExtForm(Poly scalar) : ExtForm(RatFun(std::move(scalar))) {}
  ExtForm(int c) : ExtForm(RatFun(c)) {}
  // c * d(v_1) ∧ ... ∧ d(v_k) for any order of the v's (sign applied).
  static ExtForm word(const std::vector<Var>& gens, RatFun c = RatFun(1));
  static ExtForm generator(const Var& v) { return word({v}); }

  const std::map<Word, RatFun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree of a homogeneous element; -1 for zero, throws if mixed.
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }

  ExtForm operator-() const;
  ExtForm& operator+=(const ExtForm& o);
  ExtForm& operator-=(const ExtForm& o);
  friend ExtForm operator+(ExtForm a, const ExtForm& b) { return a += b; }
  friend ExtForm operator-(ExtForm a, const ExtForm& b) { return a -= b; }
  friend ExtForm operator*(const ExtForm& a, const ExtForm& b);
  friend ExtForm operator*(const RatFun& c, const ExtForm& a);

  // Applies f to every coefficient (f must be linear for the result to mean anything).
  template <class F>
  ExtForm map_coefficients(F f) const {
    ExtForm r;
    for (const auto& [w, c] : terms_) r.insert(w, f(c));
    return r;
  }
  // Exterior derivative along the given variables: sum_v d(v) ∧ ∂_v.
  // Generator symbols are constants, so this is a derivation of degree +1.
  ExtForm differential(const std::vector<Var>& along) const;
  ExtForm simplified() const;

  std::string to_string() const;

  friend bool operator==(const ExtForm& a, const ExtForm& b);

 private:
  void insert(const Word& w, RatFun c);
  std::map<Word, RatFun> terms_;
};

// Sign of merging two sorted words, 0 if they share a generator.
int merge_sign(const Word& a, const Word& b, Word& out);

}  // namespace lamanchiral::alg
