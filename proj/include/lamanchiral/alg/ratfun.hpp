#pragma once

#include <map>
#include <string>
#include <vector>

#include "lamanchiral/alg/poly.hpp"

namespace lamanchiral::alg {

// numer / prod_k f_k^{e_k}. The f_k are nonconstant and normalized to leading
// coefficient 1; constants are folded into the numerator. No gcd is taken, so
// two equal values can have different representations; == cross-multiplies.
class RatFun {
 public:
  using Factors = std::map<Poly, int>;

  RatFun() = default;
  RatFun(Poly numer) : numer_(std::move(numer)) {}
  RatFun(int c) : numer_(c) {}
  RatFun(const Rational& c) : numer_(c) {}
  RatFun(Poly numer, Factors denom);

  // numer / factor^exp. The factor is registered as a single tracked factor.
  static RatFun quotient(Poly numer, const Poly& factor, int exp = 1);
  // One common denominator for all parts, instead of pairwise +=.
  static RatFun sum(const std::vector<RatFun>& parts);

  const Poly& numer() const { return numer_; }
  const Factors& denom() const { return denom_; }
  Poly denominator() const;
  bool is_zero() const { return numer_.is_zero(); }
  bool is_polynomial() const { return denom_.empty(); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  RatFun inverse() const;
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  RatFun derivative(const Var& v) const;
  // Throws InvalidInput if a variable is left unassigned or a factor vanishes.
  Rational evaluate(const std::map<Var, Rational>& values) const;
  // Cancels tracked factors that divide the numerator.
  RatFun simplified() const;

  std::string to_string() const;

  friend bool operator==(const RatFun& a, const RatFun& b);

 private:
  void add_factor(const Poly& f, int exp);

  Poly numer_;
  Factors denom_;
};

}  // namespace lamanchiral::alg
