#pragma once

#include "lamanchiral/chiral/weight_state.hpp"
#include "lamanchiral/limits.hpp"

namespace lamanchiral::chiral {

// Box integral of G: the chiral operation with no derivative insertions.
Poly mu_constant(const laman::HennebergSequence& seq, const Limits& limits = Limits::from_env());
Poly mu_constant(const WeightState& state);

// Box integral of G * sum_{m <= n} W^m / m!, i.e. the generating function
// truncated at total zf-degree n. Throws TruncationTooLarge past the limits.
Poly mu_truncated(const laman::HennebergSequence& seq, unsigned n, const Limits& limits = Limits::from_env());
Poly mu_truncated(const WeightState& state, unsigned n);

// Closed one-loop form -l1∧l2 e^{-(l2|zf_2o)-(l1|zf_1o)} sum (-a)^m b^k / (m+k+2)!,
// a = (l1|zf), b = (l2|zf), zf = zf_2o - zf_21 - zf_1o, truncated at zf-degree n.
Poly triangle_oracle(unsigned n);

bool is_zfrak(const Var& v);
bool is_lambda(const Var& v);

}  // namespace lamanchiral::chiral
