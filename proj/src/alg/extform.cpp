#include "lamanchiral/alg/extform.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamanchiral::alg {

int merge_sign(const Word& a, const Word& b, Word& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the a[i..] still waiting.
      if ((a.size() - i) % 2) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return sign;
}

ExtForm::ExtForm(RatFun scalar) { insert({}, std::move(scalar)); }

ExtForm ExtForm::word(const std::vector<Var>& gens, RatFun c) {
  Word w;
  int sign = 1;
  for (const auto& g : gens) {
    Word next;
    int s = merge_sign(w, {g}, next);
    if (s == 0) return {};
    sign *= s;
    w = std::move(next);
  }
  ExtForm f;
  f.insert(w, sign > 0 ? std::move(c) : -c);
  return f;
}

void ExtForm::insert(const Word& w, RatFun c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int ExtForm::degree() const {
  if (terms_.empty()) return -1;
  std::size_t d = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_)
    if (w.size() != d) throw std::logic_error("ExtForm::degree: inhomogeneous element");
  return static_cast<int>(d);
}

ExtForm ExtForm::operator-() const {
  ExtForm r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

ExtForm& ExtForm::operator+=(const ExtForm& o) {
  for (const auto& [w, c] : o.terms_) insert(w, c);
  return *this;
}

ExtForm& ExtForm::operator-=(const ExtForm& o) {
  for (const auto& [w, c] : o.terms_) insert(w, -c);
  return *this;
}

ExtForm operator*(const ExtForm& a, const ExtForm& b) {
  ExtForm r;
  Word merged;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      int s = merge_sign(wa, wb, merged);
      if (s == 0) continue;
      RatFun c = ca * cb;
      r.insert(merged, s > 0 ? std::move(c) : -c);
    }
  return r;
}

ExtForm operator*(const RatFun& c, const ExtForm& a) {
  ExtForm r;
  for (const auto& [w, x] : a.terms_) r.insert(w, c * x);
  return r;
}

ExtForm ExtForm::differential(const std::vector<Var>& along) const {
  std::map<Word, std::vector<RatFun>> parts;
  Word merged;
  for (const auto& [w, c] : terms_)
    for (const auto& v : along) {
      RatFun dc = c.derivative(v);
      if (dc.is_zero()) continue;
      int s = merge_sign({v}, w, merged);
      if (s == 0) continue;
      parts[merged].push_back(s > 0 ? std::move(dc) : -dc);
    }
  ExtForm r;
  for (const auto& [w, cs] : parts) r.insert(w, RatFun::sum(cs));
  return r;
}

ExtForm ExtForm::simplified() const { return map_coefficients([](const RatFun& c) { return c.simplified(); }); }

std::string ExtForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "[" + c.to_string() + "]";
    for (const auto& g : w) s += "*d" + g.name();
  }
  return s;
}

bool operator==(const ExtForm& a, const ExtForm& b) {
  static const RatFun zero;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      if (!(ia->second == zero)) return false;
      ++ia;
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      if (!(ib->second == zero)) return false;
      ++ib;
    } else {
      if (!(ia->second == ib->second)) return false;
      ++ia, ++ib;
    }
  }
  return true;
}

}  // namespace lamanchiral::alg
