#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lamanchiral/alg/monomial.hpp"
#include "lamanchiral/alg/rational.hpp"

namespace lamanchiral::alg {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse polynomial over Q. Terms are kept in descending grlex order with
// nonzero coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(const Rational& c);
  explicit Poly(Var v);
  Poly(Monomial m, Rational c);

  // Sorts, merges equal monomials, drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  std::set<Var> variables() const;
  bool contains(const Var& v) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly times(const Monomial& m) const;
  Poly pow(unsigned e) const;

  Poly derivative(const Var& v) const;
  // Simultaneous substitution; unmapped variables stay.
  Poly substitute(const std::map<Var, Poly>& images) const;
  Poly evaluate(const std::map<Var, Rational>& values) const;
  // Integral over [0,1] in each listed variable.
  Poly box_integrate(const std::vector<Var>& vars) const;
  // Exact quotient if d divides this polynomial, nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;

  // Groups terms by the part of the monomial in variables accepted by pred.
  template <class Pred>
  std::map<Monomial, Poly, GrlexGreater> coefficients(Pred pred) const {
    std::map<Monomial, std::vector<Term>, GrlexGreater> groups;
    for (const auto& t : terms_) {
      auto [in, out] = t.mono.split(pred);
      groups[in].push_back({std::move(out), t.coeff});
    }
    std::map<Monomial, Poly, GrlexGreater> result;
    for (auto& [m, ts] : groups) result.emplace(m, from_terms(std::move(ts)));
    return result;
  }
  // Keeps the terms whose degree in variables accepted by pred is at most n.
  template <class Pred>
  Poly truncated(Pred pred, unsigned n) const {
    Poly p;
    for (const auto& t : terms_)
      if (t.mono.split(pred).first.degree() <= n) p.terms_.push_back(t);
    return p;
  }

  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&);
  // Arbitrary but fixed total order, used for map keys.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  friend Poly add_sorted(const Poly&, const Poly&, bool);
  std::vector<Term> terms_;
};

using Vec2 = std::array<Poly, 2>;

Poly wedge2(const Vec2& a, const Vec2& b);
Poly dot2(const Vec2& a, const Vec2& b);
Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator*(const Poly& c, const Vec2& a);

Vec2 lambda_vec(const std::string& vertex);
Vec2 zfrak_vec(const std::string& tail, const std::string& head);

}  // namespace lamanchiral::alg
