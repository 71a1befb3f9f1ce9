#include "lamanchiral/alg/matrix.hpp"

#include <utility>

namespace lamanchiral::alg {

namespace {

Poly factor_power(const RatFun::Factors& fs) {
  Poly p(1);
  for (const auto& [f, e] : fs) p *= f.pow(static_cast<unsigned>(e));
  return p;
}

struct Cleared {
  Matrix<Poly> a;
  std::vector<RatFun::Factors> row_denoms;
};

// Row i of m equals row i of a divided by row_denoms[i].
Cleared clear_rows(const Matrix<RatFun>& m) {
  Cleared c{Matrix<Poly>(m.rows(), m.cols()), std::vector<RatFun::Factors>(m.rows())};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatFun::Factors& lcm = c.row_denoms[i];
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [f, e] : m(i, j).denom()) lcm[f] = std::max(lcm[f], e);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      RatFun::Factors missing;
      for (const auto& [f, e] : lcm) {
        auto it = m(i, j).denom().find(f);
        int have = it == m(i, j).denom().end() ? 0 : it->second;
        if (e > have) missing[f] = e - have;
      }
      c.a(i, j) = m(i, j).numer() * factor_power(missing);
    }
  }
  return c;
}

}  // namespace

Poly determinant(Matrix<Poly> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return Poly();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = num.divide_exact(prev);
        if (!q) throw std::logic_error("Bareiss step: inexact division");
        a(i, j) = std::move(*q);
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Matrix<Poly> adjugate(const Matrix<Poly>& a, kernels::Exec exec) {
  const std::size_t n = a.rows();
  Matrix<Poly> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Poly(1);
    return adj;
  }
  // Cofactors are independent determinants.
  const long cells = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic) if (exec == kernels::Exec::Parallel)
  for (long c = 0; c < cells; ++c) {
    std::size_t i = static_cast<std::size_t>(c) / n, j = static_cast<std::size_t>(c) % n;
    Poly d = determinant(a.minor(j, i));
    adj(i, j) = (i + j) % 2 ? -d : d;
  }
  return adj;
}

RatFun determinant(const Matrix<RatFun>& m) {
  Cleared c = clear_rows(m);
  RatFun::Factors all;
  for (const auto& fs : c.row_denoms)
    for (const auto& [f, e] : fs) all[f] += e;
  return RatFun(determinant(c.a), all);
}

Matrix<RatFun> inverse(const Matrix<RatFun>& m, kernels::Exec exec) {
  Cleared c = clear_rows(m);
  Poly det = determinant(c.a);
  if (det.is_zero()) throw std::domain_error("inverse: singular matrix");
  Matrix<Poly> adj = adjugate(c.a, exec);
  const std::size_t n = m.rows();
  // M = diag(L)^{-1} A, so M^{-1} = adj(A) diag(L) / det(A).
  Matrix<RatFun> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = RatFun::quotient(adj(i, j) * factor_power(c.row_denoms[j]), det);
  return inv;
}

}  // namespace lamanchiral::alg
