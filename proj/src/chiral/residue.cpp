#include "lamanchiral/chiral/residue.hpp"

#include <random>

#include "lamanchiral/errors.hpp"

namespace lamanchiral::chiral {

using alg::Rational;

Var d1_z(int vertex) { return Var::z(std::to_string(vertex), 1); }
Var d1_lambda() { return Var::lambda("1", 1); }
Var d1_w() { return Var::w(); }

Poly residue_d1(const Poly& g, int n) {
  if (n < 1) throw NonpositiveOrder("residue order must be positive, got " + std::to_string(n));
  const Var z1 = d1_z(1), z2 = d1_z(2);
  const Poly lambda(d1_lambda()), w(d1_w());
  Poly h = g.substitute({{z2, w}});
  for (int k = 1; k < n; ++k) h = h.derivative(z1) + lambda * h;
  return h.substitute({{z1, w}}).scaled(1 / alg::factorial(static_cast<unsigned>(n - 1)));
}

std::string residue_d1_dmodule_check(const std::vector<ResidueSample>& samples) {
  const Var z1 = d1_z(1), z2 = d1_z(2), lam = d1_lambda(), wv = d1_w();
  const Poly w(wv), lambda(lam);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& [g, n] = samples[k];
    const Poly mu = residue_d1(g, n);
    const Poly next = residue_d1(g, n + 1).scaled(n);
    struct Rule {
      const char* name;
      Poly lhs, rhs;
    } rules[] = {
        {"z1 multiplication", residue_d1(Poly(z1) * g, n), w * mu + mu.derivative(lam)},
        {"z2 multiplication", residue_d1(Poly(z2) * g, n), w * mu},
        {"d_z1", next - residue_d1(g.derivative(z1), n), lambda * mu},
        {"d_z2", -next - residue_d1(g.derivative(z2), n), -mu.derivative(wv) - lambda * mu},
    };
    for (const auto& rule : rules)
      if (!(rule.lhs == rule.rhs))
        return "sample " + std::to_string(k) + " (g = " + g.to_string() + ", n = " + std::to_string(n) +
               "), " + rule.name + ": " + rule.lhs.to_string() + " != " + rule.rhs.to_string();
  }
  return {};
}

std::vector<ResidueSample> random_residue_samples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5), den(1, 4), order(1, 4), exps(0, 3);
  std::vector<ResidueSample> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<alg::Term> terms;
    for (int t = 0; t < 4; ++t) {
      int a = exps(rng), b = exps(rng);
      if (a + b > 3) b = 3 - a;
      Rational c(coeff(rng), den(rng));
      c.canonicalize();
      terms.push_back({alg::Monomial::from_factors({{d1_z(1), unsigned(a)}, {d1_z(2), unsigned(b)}}), c});
    }
    out.push_back({Poly::from_terms(std::move(terms)), order(rng)});
  }
  return out;
}

}  // namespace lamanchiral::chiral
