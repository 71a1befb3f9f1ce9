#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamanchiral/alg/var.hpp"

namespace lamanchiral::alg {

// Power product; factors sorted by Var with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;
  explicit Monomial(Var v, unsigned e = 1);
  // Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent(const Var& v) const;

  Monomial operator*(const Monomial& o) const;
  std::optional<Monomial> divide(const Monomial& o) const;
  Monomial without(const Var& v) const;
  // Splits off the factors accepted by pred.
  template <class Pred>
  std::pair<Monomial, Monomial> split(Pred pred) const {
    Monomial in, out;
    for (const auto& f : factors_) {
      Monomial& m = pred(f.first) ? in : out;
      m.factors_.push_back(f);
      m.degree_ += f.second;
    }
    return {std::move(in), std::move(out)};
  }

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

// Graded lexicographic order: +1 if a > b, -1 if a < b, 0 if equal.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

}  // namespace lamanchiral::alg
