#include "lamanchiral/alg/monomial.hpp"

#include <algorithm>

namespace lamanchiral::alg {

Monomial::Monomial(Var v, unsigned e) {
  if (e > 0) {
    factors_.emplace_back(std::move(v), e);
    degree_ = e;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  Monomial m;
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == f.first)
      m.factors_.back().second += f.second;
    else
      m.factors_.push_back(std::move(f));
    m.degree_ += f.second;
  }
  return m;
}

unsigned Monomial::exponent(const Var& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Var& x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + o.factors_.size());
  auto i = factors_.begin(), j = o.factors_.begin();
  while (i != factors_.end() && j != o.factors_.end()) {
    if (i->first == j->first) {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    } else if (i->first < j->first) {
      m.factors_.push_back(*i++);
    } else {
      m.factors_.push_back(*j++);
    }
  }
  m.factors_.insert(m.factors_.end(), i, factors_.end());
  m.factors_.insert(m.factors_.end(), j, o.factors_.end());
  m.degree_ = degree_ + o.degree_;
  return m;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial m;
  auto j = o.factors_.begin();
  for (const auto& f : factors_) {
    if (j != o.factors_.end() && j->first < f.first) return std::nullopt;
    if (j != o.factors_.end() && j->first == f.first) {
      if (j->second > f.second) return std::nullopt;
      if (j->second < f.second) m.factors_.emplace_back(f.first, f.second - j->second);
      ++j;
    } else {
      m.factors_.push_back(f);
    }
  }
  if (j != o.factors_.end()) return std::nullopt;
  m.degree_ = degree_ - o.degree_;
  return m;
}

Monomial Monomial::without(const Var& v) const {
  return split([&](const Var& x) { return x == v; }).second;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second ? 1 : -1;
      ++i, ++j;
    } else {
      // The side holding the earlier variable has the larger exponent there.
      return fa[i].first < fb[j].first ? 1 : -1;
    }
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

}  // namespace lamanchiral::alg
