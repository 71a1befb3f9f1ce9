#include "lamanchiral/alg/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace lamanchiral::alg::kernels {

namespace {

using Accumulator = std::map<Monomial, Rational, GrlexGreater>;

Poly from_accumulator(Accumulator&& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  // Already ordered and merged; from_terms only re-checks.
  return Poly::from_terms(std::move(terms));
}

// Splits [0, n) into at most `parts` contiguous blocks.
std::vector<std::pair<std::size_t, std::size_t>> blocks(std::size_t n, std::size_t parts) {
  parts = std::max<std::size_t>(1, std::min(parts, n));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < parts; ++k) out.emplace_back(n * k / parts, n * (k + 1) / parts);
  return out;
}

std::size_t block_count(std::size_t n) {
  return std::min<std::size_t>(n, 4 * static_cast<std::size_t>(omp_get_max_threads()));
}

Poly tree_merge(std::vector<Poly> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::size_t half = parts.size() / 2;
    std::vector<Poly> next(parts.size() - half);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < half; ++k) next[k] = parts[2 * k] + parts[2 * k + 1];
    if (parts.size() % 2) next.back() = std::move(parts.back());
    parts = std::move(next);
  }
  return std::move(parts.front());
}

Poly term_image_serial(const Term& t, const std::map<Var, Poly>& images) {
  Poly acc(t.coeff);
  std::vector<Monomial::Factor> kept;
  for (const auto& [v, e] : t.mono.factors()) {
    auto it = images.find(v);
    if (it == images.end()) {
      kept.emplace_back(v, e);
      continue;
    }
    for (unsigned k = 0; k < e; ++k) acc = multiply(acc, it->second, Exec::Serial);
  }
  return multiply(acc, Poly(Monomial::from_factors(std::move(kept)), 1), Exec::Serial);
}

}  // namespace

Poly multiply(const Poly& a, const Poly& b, Exec exec) {
  if (a.is_zero() || b.is_zero()) return {};
  if (exec == Exec::Serial) {
    Accumulator acc;
    for (const auto& x : a.terms())
      for (const auto& y : b.terms()) {
        auto [it, fresh] = acc.try_emplace(x.mono * y.mono, x.coeff * y.coeff);
        if (!fresh) it->second += x.coeff * y.coeff;
      }
    return from_accumulator(std::move(acc));
  }
  // Each block of a-terms times b is a sorted polynomial: x.mono * (b in order)
  // stays in order, so a block product is a sum of sorted runs.
  auto bs = blocks(a.size(), block_count(a.size()));
  std::vector<Poly> parts(bs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < bs.size(); ++k) {
    std::vector<Poly> runs;
    for (std::size_t i = bs[k].first; i < bs[k].second; ++i)
      runs.push_back(b.times(a.terms()[i].mono).scaled(a.terms()[i].coeff));
    while (runs.size() > 1) {
      std::vector<Poly> next;
      for (std::size_t r = 0; r + 1 < runs.size(); r += 2) next.push_back(runs[r] + runs[r + 1]);
      if (runs.size() % 2) next.push_back(std::move(runs.back()));
      runs = std::move(next);
    }
    parts[k] = std::move(runs.front());
  }
  return tree_merge(std::move(parts));
}

Poly substitute(const Poly& p, const std::map<Var, Poly>& images, Exec exec) {
  if (exec == Exec::Serial) {
    Poly result;
    for (const auto& t : p.terms()) result += term_image_serial(t, images);
    return result;
  }
  // Shared power table, filled before the parallel region.
  std::map<std::pair<Var, unsigned>, Poly> powers;
  for (const auto& t : p.terms())
    for (const auto& [v, e] : t.mono.factors())
      if (images.count(v)) powers.try_emplace({v, e});
  for (auto& [key, value] : powers) value = images.at(key.first).pow(key.second);
  auto bs = blocks(p.size(), block_count(p.size()));
  std::vector<Poly> parts(bs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < bs.size(); ++k) {
    std::vector<Poly> local;
    for (std::size_t i = bs[k].first; i < bs[k].second; ++i) {
      const Term& t = p.terms()[i];
      auto [mapped, kept] = t.mono.split([&](const Var& v) { return images.count(v) > 0; });
      Poly img = Poly(std::move(kept), t.coeff);
      for (const auto& [v, e] : mapped.factors()) img = img * powers.at({v, e});
      local.push_back(std::move(img));
    }
    Poly acc;
    for (auto& q : local) acc += q;
    parts[k] = std::move(acc);
  }
  return tree_merge(std::move(parts));
}

Poly box_integrate(const Poly& p, const std::vector<Var>& vars, Exec exec) {
  auto integrate_term = [&](const Term& t) {
    auto [in, out] = t.mono.split(
        [&](const Var& v) { return std::find(vars.begin(), vars.end(), v) != vars.end(); });
    Rational c = t.coeff;
    for (const auto& f : in.factors()) c /= f.second + 1;
    return Term{std::move(out), std::move(c)};
  };
  if (exec == Exec::Serial) {
    Accumulator acc;
    for (const auto& t : p.terms()) {
      Term r = integrate_term(t);
      acc[r.mono] += r.coeff;
    }
    return from_accumulator(std::move(acc));
  }
  std::vector<Term> out(p.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = integrate_term(p.terms()[i]);
  return Poly::from_terms(std::move(out));
}

Poly sum(std::vector<Poly> parts, Exec exec) {
  if (exec == Exec::Parallel) return tree_merge(std::move(parts));
  Poly acc;
  for (const auto& q : parts) acc += q;
  return acc;
}

}  // namespace lamanchiral::alg::kernels
