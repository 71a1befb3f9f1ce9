#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lamanchiral::alg {

// mpq_class keeps denominators positive and reduced after canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else or q == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace lamanchiral::alg
