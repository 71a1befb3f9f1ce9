#include "lamanchiral/alg/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "lamanchiral/alg/kernels.hpp"
#include "lamanchiral/errors.hpp"

namespace lamanchiral::alg {

namespace {

Poly power_product(const std::map<Poly, int>& exps) {
  Poly p(1);
  for (const auto& [f, e] : exps)
    if (e > 0) p *= f.pow(static_cast<unsigned>(e));
  return p;
}

}  // namespace

RatFun::RatFun(Poly numer, Factors denom) : numer_(std::move(numer)) {
  for (const auto& [f, e] : denom) add_factor(f, e);
}

RatFun RatFun::quotient(Poly numer, const Poly& factor, int exp) {
  RatFun r(std::move(numer));
  r.add_factor(factor, exp);
  return r;
}

void RatFun::add_factor(const Poly& f, int exp) {
  if (exp == 0) return;
  if (exp < 0) throw std::logic_error("RatFun: negative denominator exponent");
  if (f.is_zero()) throw std::domain_error("RatFun: zero denominator");
  if (f.is_constant()) {
    Rational c = f.constant_term();
    for (int k = 0; k < exp; ++k) numer_ = numer_.scaled(1 / c);
    return;
  }
  Rational lc = f.leading().coeff;
  for (int k = 0; k < exp; ++k) numer_ = numer_.scaled(1 / lc);
  denom_[f.scaled(1 / lc)] += exp;
}

Poly RatFun::denominator() const { return power_product(denom_); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.numer_ = -numer_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Factors lcm = denom_;
  for (const auto& [f, e] : o.denom_) lcm[f] = std::max(lcm[f], e);
  std::map<Poly, int> mine, theirs;
  for (const auto& [f, e] : lcm) {
    auto a = denom_.find(f);
    auto b = o.denom_.find(f);
    mine[f] = e - (a == denom_.end() ? 0 : a->second);
    theirs[f] = e - (b == o.denom_.end() ? 0 : b->second);
  }
  numer_ = numer_ * power_product(mine) + o.numer_ * power_product(theirs);
  denom_ = numer_.is_zero() ? Factors{} : std::move(lcm);
  return *this;
}

RatFun RatFun::sum(const std::vector<RatFun>& parts) {
  Factors lcm;
  for (const auto& p : parts)
    if (!p.is_zero())
      for (const auto& [f, e] : p.denom_) lcm[f] = std::max(lcm[f], e);
  std::vector<Poly> numers;
  for (const auto& p : parts) {
    if (p.is_zero()) continue;
    std::map<Poly, int> missing;
    for (const auto& [f, e] : lcm) {
      auto it = p.denom_.find(f);
      missing[f] = e - (it == p.denom_.end() ? 0 : it->second);
    }
    numers.push_back(p.numer_ * power_product(missing));
  }
  RatFun r(kernels::sum(std::move(numers), kernels::Exec::Parallel));
  if (!r.numer_.is_zero()) r.denom_ = std::move(lcm);
  return r;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  numer_ *= o.numer_;
  if (numer_.is_zero()) {
    denom_.clear();
    return *this;
  }
  for (const auto& [f, e] : o.denom_) denom_[f] += e;
  return *this;
}

RatFun RatFun::inverse() const {
  if (numer_.is_zero()) throw std::domain_error("RatFun: inverse of zero");
  RatFun r(denominator());
  r.add_factor(numer_, 1);
  return r;
}

RatFun RatFun::derivative(const Var& v) const {
  std::vector<std::pair<Poly, int>> moving;
  for (const auto& [f, e] : denom_)
    if (f.contains(v)) moving.emplace_back(f, e);
  Poly all(1);
  for (const auto& [f, e] : moving) all *= f;
  // d(N / prod f^e) = (N' prod f - N sum_k e_k f_k' prod_{l != k} f_l) / prod f^{e+1}
  Poly numer = numer_.derivative(v) * all;
  for (std::size_t k = 0; k < moving.size(); ++k) {
    Poly rest = numer_.scaled(moving[k].second) * moving[k].first.derivative(v);
    for (std::size_t l = 0; l < moving.size(); ++l)
      if (l != k) rest *= moving[l].first;
    numer -= rest;
  }
  RatFun r(std::move(numer));
  if (r.numer_.is_zero()) return r;
  r.denom_ = denom_;
  for (const auto& [f, e] : moving) r.denom_[f] += 1;
  return r;
}

Rational RatFun::evaluate(const std::map<Var, Rational>& values) const {
  auto value_of = [&](const Poly& p) {
    Poly q = p.evaluate(values);
    if (!q.is_constant()) throw InvalidInput("evaluate: unassigned variables in " + q.to_string());
    return q.constant_term();
  };
  Rational v = value_of(numer_);
  for (const auto& [f, e] : denom_) {
    Rational d = value_of(f);
    if (d == 0) throw InvalidInput("evaluate: denominator factor " + f.to_string() + " vanishes");
    for (int k = 0; k < e; ++k) v /= d;
  }
  return v;
}

namespace {

// Largest monomial dividing every term of p.
Monomial monomial_content(const Poly& p) {
  std::map<Var, unsigned> low;
  for (const auto& [v, e] : p.leading().mono.factors()) low[v] = e;
  for (const auto& t : p.terms())
    for (auto it = low.begin(); it != low.end();) {
      it->second = std::min(it->second, t.mono.exponent(it->first));
      it = it->second == 0 ? low.erase(it) : std::next(it);
    }
  return Monomial::from_factors({low.begin(), low.end()});
}

}  // namespace

RatFun RatFun::simplified() const {
  RatFun r = *this;
  // Split monomial content off each factor so that single variables can cancel.
  Factors split;
  for (const auto& [f, e] : r.denom_) {
    Monomial content = monomial_content(f);
    if (content.is_one()) {
      split[f] += e;
      continue;
    }
    Poly rest = *f.divide_exact(Poly(content, 1));
    if (!rest.is_constant()) split[rest] += e;
    for (const auto& [v, k] : content.factors()) split[Poly(v)] += e * static_cast<int>(k);
  }
  r.denom_ = std::move(split);
  for (auto it = r.denom_.begin(); it != r.denom_.end();) {
    while (it->second > 0) {
      auto q = r.numer_.divide_exact(it->first);
      if (!q) break;
      r.numer_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? r.denom_.erase(it) : std::next(it);
  }
  return r;
}

std::string RatFun::to_string() const {
  if (denom_.empty()) return numer_.to_string();
  std::string d;
  for (const auto& [f, e] : denom_) {
    if (!d.empty()) d += "*";
    d += "(" + f.to_string() + ")";
    if (e > 1) d += "^" + std::to_string(e);
  }
  return "(" + numer_.to_string() + ")/" + d;
}

bool operator==(const RatFun& a, const RatFun& b) {
  std::map<Poly, int> for_a, for_b;
  for (const auto& [f, e] : a.denom_) for_b[f] += e;
  for (const auto& [f, e] : b.denom_) for_a[f] += e;
  // Cancel the common part of the two denominators before cross-multiplying.
  for (auto& [f, e] : for_a) {
    auto it = for_b.find(f);
    if (it == for_b.end()) continue;
    int m = std::min(e, it->second);
    e -= m;
    it->second -= m;
  }
  return a.numer_ * power_product(for_a) == b.numer_ * power_product(for_b);
}

}  // namespace lamanchiral::alg
