#include "lamanchiral/jouanolou/jouanolou.hpp"

#include <array>
#include <set>
#include <vector>

#include "lamanchiral/errors.hpp"

namespace lamanchiral::jouanolou {

using alg::Rational;
using alg::Var;
using alg::VarKind;

namespace {

void require_distinct(const std::string& i, const std::string& j) {
  if (i == j) throw SelfLoop("x_" + i + j + " needs two distinct vertices");
}

std::vector<Var> antiholomorphic_vars(const ExtForm& a) {
  std::set<Var> vs;
  auto collect = [&](const Poly& p) {
    for (const auto& v : p.variables())
      if (v.kind == VarKind::Zbar) vs.insert(v);
  };
  for (const auto& [w, c] : a.terms()) {
    collect(c.numer());
    for (const auto& [f, e] : c.denom()) collect(f);
  }
  return {vs.begin(), vs.end()};
}

std::string word_name(const alg::Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& g : w) s += (s.empty() ? "d" : "^d") + g.name();
  return s;
}

std::size_t size_of(const ExtForm& a) {
  std::size_t n = 0;
  for (const auto& [w, c] : a.terms()) n += c.numer().size();
  return n;
}

}  // namespace

Poly norm(const std::string& i, const std::string& j) {
  Poly q;
  for (int s = 1; s <= 2; ++s)
    q += (Poly(Var::z(i, s)) - Poly(Var::z(j, s))) * (Poly(Var::zbar(i, s)) - Poly(Var::zbar(j, s)));
  return q;
}

ExtForm z(const std::string& i, int s) { return ExtForm(Poly(Var::z(i, s))); }

ExtForm zbar(const std::string& i, int s) { return ExtForm(Poly(Var::zbar(i, s))); }

ExtForm gen_x(const std::string& i, const std::string& j, int s) {
  require_distinct(i, j);
  return ExtForm(RatFun::quotient(Poly(Var::zbar(i, s)) - Poly(Var::zbar(j, s)), norm(i, j)));
}

ExtForm gen_dx(const std::string& i, const std::string& j, int s) { return dbar(gen_x(i, j, s)); }

ExtForm dbar(const ExtForm& a) { return a.differential(antiholomorphic_vars(a)).simplified(); }

ExtForm d_action(const ExtForm& a, const std::string& i, int t) {
  Var v = Var::z(i, t);
  return a.map_coefficients([&](const RatFun& c) { return c.derivative(v); });
}

ExtForm propagator(const std::string& i, const std::string& j) {
  return (gen_x(i, j, 1) * gen_dx(i, j, 2) - gen_x(i, j, 2) * gen_dx(i, j, 1)).simplified();
}

ExtForm x_wedge(const std::string& i, const std::string& j, const std::string& k, const std::string& l) {
  return (gen_x(i, j, 1) * gen_x(k, l, 2) - gen_x(i, j, 2) * gen_x(k, l, 1)).simplified();
}

Certificate compare(const ExtForm& lhs, const ExtForm& rhs) {
  Certificate c;
  c.lhs_terms = size_of(lhs);
  c.rhs_terms = size_of(rhs);
  ExtForm diff = lhs - rhs;
  for (const auto& [w, coeff] : diff.terms()) {
    RatFun reduced = coeff.simplified();
    if (reduced.is_zero()) continue;
    c.detail = "word " + word_name(w) + ": lhs - rhs = " + reduced.to_string();
    return c;
  }
  c.ok = true;
  return c;
}

// dbar of f_1 ... f_n by the graded Leibniz rule, so each derivative acts on
// a small factor instead of the expanded product.
ExtForm dbar_product(const std::vector<ExtForm>& factors) {
  ExtForm total;
  int sign = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ExtForm term(sign);
    for (std::size_t j = 0; j < factors.size(); ++j)
      term = (term * (j == i ? dbar(factors[j]) : factors[j])).simplified();
    total += term;
    if (factors[i].degree() % 2) sign = -sign;
  }
  return total.simplified();
}

Certificate verify_arnold() {
  const ExtForm p12 = propagator("1", "2"), p13 = propagator("1", "3"), p23 = propagator("2", "3");
  // The middle product is P23 P12 = -P12 P23; with P12 P23 there is no primitive.
  ExtForm lhs = (p12 * p13).simplified() + (p23 * p12).simplified() + (p13 * p23).simplified();
  ExtForm rhs = dbar_product({p13, x_wedge("1", "2", "2", "3")}) + dbar_product({p12, x_wedge("1", "3", "2", "3")}) +
                dbar_product({p23, x_wedge("1", "2", "1", "3")});
  return compare(lhs, rhs);
}

Certificate verify_arnold_corollary() {
  const ExtForm p12 = propagator("1", "2"), p13 = propagator("1", "3"), p23 = propagator("2", "3");
  // Arnold times P23 on the right, with d(A P23) = dA P23 for closed P23.
  ExtForm lhs = ((p12 * p13).simplified() * p23).simplified();
  ExtForm rhs = -(dbar_product({p23, p13, x_wedge("1", "2", "2", "3")}) +
                  dbar_product({p23, p12, x_wedge("1", "3", "2", "3")}));
  return compare(lhs, rhs);
}

Certificate generating_series_check(unsigned order) {
  const ExtForm p = propagator("1", "2");
  const ExtForm x1 = gen_x("1", "2", 1), x2 = gen_x("1", "2", 2);
  Certificate total;
  total.ok = true;
  // dz[r][s] = d^r_{z^1_1} d^s_{z^2_1} applied to (P, x^1, x^2)
  std::vector<std::vector<std::array<ExtForm, 3>>> dz(order + 1, std::vector<std::array<ExtForm, 3>>(order + 1));
  dz[0][0] = {p, x1, x2};
  for (unsigned k = 1; k <= order; ++k)
    for (unsigned r = 0; r <= k; ++r) {
      unsigned s = k - r;
      for (int f = 0; f < 3; ++f)
        dz[r][s][f] = (r > 0 ? d_action(dz[r - 1][s][f], "1", 1) : d_action(dz[r][s - 1][f], "1", 2)).simplified();
    }
  ExtForm x1_pow(1);
  for (unsigned r = 0; r <= order; ++r, x1_pow = (x1_pow * x1).simplified()) {
    ExtForm mono = x1_pow;
    for (unsigned s = 0; r + s <= order; ++s, mono = (mono * x2).simplified()) {
      unsigned k = r + s;
      // (x|zf)^k contributes C(k,r) (x^1)^r (x^2)^s to the zf^(r,s) coefficient.
      Rational sign_binom = alg::binomial(k, r) * (k % 2 ? -1 : 1);
      RatFun scale = RatFun(Rational(1 / (alg::factorial(r) * alg::factorial(s))));
      const std::array<ExtForm, 3> series = {RatFun(sign_binom * (k + 1)) * (mono * p),
                                             RatFun(sign_binom) * (mono * x1),
                                             RatFun(sign_binom) * (mono * x2)};
      for (int f = 0; f < 3; ++f) {
        Certificate c = compare(series[f], scale * dz[r][s][f]);
        total.lhs_terms += c.lhs_terms;
        total.rhs_terms += c.rhs_terms;
        if (!c.ok) {
          static const char* names[] = {"P_12", "x^1_12", "x^2_12"};
          total.ok = false;
          total.detail = std::string(names[f]) + " at zf^(" + std::to_string(r) + "," + std::to_string(s) +
                         "): " + c.detail;
          return total;
        }
      }
    }
  }
  return total;
}

}  // namespace lamanchiral::jouanolou
