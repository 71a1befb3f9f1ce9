#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lamanchiral/alg/extform.hpp"

// Jouanolou algebra in dimension 2 through the analytic embedding
//   x^s_ij -> (zb^s_i - zb^s_j) / Q_ij,   Q_ij = sum_s (z^s_i - z^s_j)(zb^s_i - zb^s_j),
// with zb independent of z. The embedding is injective, so identities are
// checked as equalities of rational forms.
namespace lamanchiral::jouanolou {

using alg::ExtForm;
using alg::Poly;
using alg::RatFun;

Poly norm(const std::string& i, const std::string& j);

ExtForm z(const std::string& i, int s);
ExtForm zbar(const std::string& i, int s);
ExtForm gen_x(const std::string& i, const std::string& j, int s);
ExtForm gen_dx(const std::string& i, const std::string& j, int s);

// Derivation zb -> d(zb), z -> 0.
ExtForm dbar(const ExtForm& a);
// dbar(f_1 ... f_n) via the graded Leibniz rule; factors must be homogeneous.
ExtForm dbar_product(const std::vector<ExtForm>& factors);
// Holomorphic partial derivative along z^t_i, applied to coefficients.
ExtForm d_action(const ExtForm& a, const std::string& i, int t);

// P_ij = x^1 dx^2 - x^2 dx^1
ExtForm propagator(const std::string& i, const std::string& j);
// x_ij ∧ x_kl = x^1_ij x^2_kl - x^2_ij x^1_kl (degree 0)
ExtForm x_wedge(const std::string& i, const std::string& j, const std::string& k, const std::string& l);

struct Certificate {
  bool ok = false;
  std::size_t lhs_terms = 0, rhs_terms = 0;
  std::string detail;  // first differing word when !ok
};

// lhs == rhs, with a report of sizes or of the first differing word.
Certificate compare(const ExtForm& lhs, const ExtForm& rhs);

// P12 P13 + P23 P12 + P13 P23 = d(P13 x12∧x23 + P12 x13∧x23 + P23 x12∧x13)
Certificate verify_arnold();
// P12 P13 P23 = -d(P23 P13 x12∧x23 + P23 P12 x13∧x23)
Certificate verify_arnold_corollary();
// Taylor coefficients of P_12(zf) = P/(1+(x|zf))^2 and x(zf) = x/(1+(x|zf))
// against (1/r!s!) d^r_{z^1_1} d^s_{z^2_1} of P_12 and x_12, all r+s <= order.
// Order 0 compares the constant coefficients only.
Certificate generating_series_check(unsigned order);

}  // namespace lamanchiral::jouanolou
