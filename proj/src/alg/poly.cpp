#include "lamanchiral/alg/poly.hpp"

#include <algorithm>

#include "lamanchiral/alg/kernels.hpp"

namespace lamanchiral::alg {

using kernels::Exec;

namespace {

Exec policy(std::size_t work) {
  return work >= kernels::parallel_threshold ? Exec::Parallel : Exec::Serial;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly::Poly(Var v) { terms_.push_back({Monomial(std::move(v)), Rational(1)}); }

Poly::Poly(Monomial m, Rational c) {
  if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_compare(x.mono, y.mono) > 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

std::set<Var> Poly::variables() const {
  std::set<Var> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vs.insert(f.first);
  return vs;
}

bool Poly::contains(const Var& v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.exponent(v) > 0; });
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly add_sorted(const Poly& a, const Poly& b, bool negate_b) {
  Poly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  auto push_b = [&](const Term& t) {
    r.terms_.push_back(t);
    if (negate_b) r.terms_.back().coeff = -t.coeff;
  };
  while (i != a.terms_.end() && j != b.terms_.end()) {
    int c = grlex_compare(i->mono, j->mono);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      push_b(*j++);
    } else {
      Rational s = negate_b ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
      if (s != 0) r.terms_.push_back({i->mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i != a.terms_.end(); ++i) r.terms_.push_back(*i);
  for (; j != b.terms_.end(); ++j) push_b(*j);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  return *this = add_sorted(*this, o, false);
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  return *this = add_sorted(*this, o, true);
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.constant_term());
  if (b.is_constant()) return a.scaled(b.constant_term());
  return kernels::multiply(a, b, policy(a.size() * b.size()));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::times(const Monomial& m) const {
  // Multiplying by a monomial preserves a monomial order.
  Poly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff});
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(const Var& v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(v);
    if (e == 0) continue;
    auto [in, rest] = t.mono.split([&](const Var& x) { return x == v; });
    out.push_back({rest * Monomial(v, e - 1), t.coeff * e});
  }
  return from_terms(std::move(out));
}

Poly Poly::substitute(const std::map<Var, Poly>& images) const {
  if (images.empty() || is_zero()) return *this;
  std::size_t work = terms_.size();
  for (const auto& [v, p] : images) work *= std::max<std::size_t>(1, p.size());
  return kernels::substitute(*this, images, policy(work));
}

Poly Poly::evaluate(const std::map<Var, Rational>& values) const {
  std::map<Var, Poly> images;
  for (const auto& [v, q] : values) images.emplace(v, Poly(q));
  return substitute(images);
}

Poly Poly::box_integrate(const std::vector<Var>& vars) const {
  if (vars.empty()) return *this;
  return kernels::box_integrate(*this, vars, policy(terms_.size()));
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (d.is_constant()) return scaled(1 / d.constant_term());
  // Remainder in a map so each step costs |d| updates, not a full merge.
  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quot;
  const Term& lead = d.leading();
  while (!rem.empty()) {
    auto m = rem.begin()->first.divide(lead.mono);
    if (!m) return std::nullopt;
    Rational c = rem.begin()->second / lead.coeff;
    for (const auto& t : d.terms_) {
      auto [pos, fresh] = rem.try_emplace(t.mono * *m);
      pos->second -= c * t.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quot.push_back({std::move(*m), std::move(c)});
  }
  return from_terms(std::move(quot));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    bool neg = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (t.mono.is_one()) {
      s += alg::to_string(mag);
    } else {
      if (mag != 1) s += alg::to_string(mag) + "*";
      s += t.mono.to_string();
    }
  }
  return s;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono))
      return false;
  return true;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (int c = grlex_compare(a.terms_[i].mono, b.terms_[i].mono)) return c < 0;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return false;
}

Poly wedge2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

Poly dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }

Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }

Vec2 operator*(const Poly& c, const Vec2& a) { return {c * a[0], c * a[1]}; }

Vec2 lambda_vec(const std::string& vertex) {
  return {Poly(Var::lambda(vertex, 1)), Poly(Var::lambda(vertex, 2))};
}

Vec2 zfrak_vec(const std::string& tail, const std::string& head) {
  return {Poly(Var::zfrak(tail, head, 1)), Poly(Var::zfrak(tail, head, 2))};
}

}  // namespace lamanchiral::alg
