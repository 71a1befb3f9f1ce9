#include "lamanchiral/chiral/mu.hpp"

#include "lamanchiral/errors.hpp"

namespace lamanchiral::chiral {

using alg::Rational;
using alg::VarKind;

namespace {

void check_limits(const laman::HennebergSequence& seq, unsigned n, const Limits& limits) {
  std::size_t vertices = seq.moves.size() + 2;
  if (vertices > limits.max_vertices)
    throw TruncationTooLarge(std::to_string(vertices) + " vertices exceeds the limit of " +
                             std::to_string(limits.max_vertices) + " (set LAMANCHIRAL_MAX_VERTICES)");
  if (n > limits.max_order)
    throw TruncationTooLarge("order " + std::to_string(n) + " exceeds the limit of " +
                             std::to_string(limits.max_order));
}

}  // namespace

bool is_zfrak(const Var& v) { return v.kind == VarKind::Zfrak; }
bool is_lambda(const Var& v) { return v.kind == VarKind::Lambda; }

Poly mu_constant(const WeightState& state) { return state.G().box_integrate(state.box_vars()); }

Poly mu_constant(const laman::HennebergSequence& seq, const Limits& limits) {
  check_limits(seq, 0, limits);
  return mu_constant(build_state(seq));
}

Poly mu_truncated(const WeightState& state, unsigned n) {
  const Poly w = state.W();
  const auto vars = state.box_vars();
  // W is linear in zf, so W^m is exactly the zf-degree m part.
  Poly result, power = state.G();
  for (unsigned m = 0; m <= n; ++m) {
    if (m > 0) power = power * w;
    result += power.box_integrate(vars).scaled(1 / alg::factorial(m));
  }
  return result;
}

Poly mu_truncated(const laman::HennebergSequence& seq, unsigned n, const Limits& limits) {
  check_limits(seq, n, limits);
  return mu_truncated(build_state(seq), n);
}

Poly triangle_oracle(unsigned n) {
  using alg::dot2;
  using alg::lambda_vec;
  using alg::zfrak_vec;
  const auto l1 = lambda_vec("1"), l2 = lambda_vec("2");
  const auto zf = zfrak_vec("2", "o") - zfrak_vec("2", "1") - zfrak_vec("1", "o");
  const Poly a = dot2(l1, zf), b = dot2(l2, zf);
  const Poly exponent = -dot2(l2, zfrak_vec("2", "o")) - dot2(l1, zfrak_vec("1", "o"));

  Poly prefactor, power(1);
  for (unsigned k = 0; k <= n; ++k, power = power * exponent)
    prefactor += power.scaled(1 / alg::factorial(k));
  // Simplex moments: int l1^m l2^k = m! k! / (m+k+2)!, against the 1/(m! k!) of the exponential.
  Poly simplex;
  for (unsigned m = 0; m <= n; ++m)
    for (unsigned k = 0; m + k <= n; ++k) {
      Rational c = (m % 2 ? -1 : 1) / alg::factorial(m + k + 2);
      simplex += (a.pow(m) * b.pow(k)).scaled(c);
    }
  Poly series = (prefactor * simplex).truncated(is_zfrak, n);
  return -(alg::wedge2(l1, l2) * series);
}

}  // namespace lamanchiral::chiral
