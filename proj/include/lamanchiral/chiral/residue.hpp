#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lamanchiral/alg/poly.hpp"

// One-dimensional unit chiral algebra: mu(g(z1,z2) / (z1 - z2)^n) as a
// polynomial in w and lambda_1 (the d w factor is left implicit).
namespace lamanchiral::chiral {

using alg::Poly;
using alg::Var;

Var d1_z(int vertex);   // z_1 or z_2
Var d1_lambda();        // lambda_1
Var d1_w();

// (1/(n-1)!) ((d_{z1} + lambda_1)^{n-1} g(z1, w)) at z1 = w. Throws NonpositiveOrder.
Poly residue_d1(const Poly& g, int n);

struct ResidueSample {
  Poly g;
  int n = 1;
};

// Checks, per sample, the module rules of the target
//   mu(z1 g, n) = (w + d_{lambda1}) mu(g, n)       mu(z2 g, n) = w mu(g, n)
//   -mu(d_{z1} g, n) + n mu(g, n+1) = lambda1 mu(g, n)
//   -mu(d_{z2} g, n) - n mu(g, n+1) = (lambda_* - lambda1) mu(g, n),  lambda_* = -d_w.
// Returns an empty string or a description of the first failure.
std::string residue_d1_dmodule_check(const std::vector<ResidueSample>& samples);

// Seeded random g of degree <= 3 in z1, z2 and n in 1..4.
std::vector<ResidueSample> random_residue_samples(std::size_t count, std::uint64_t seed);

}  // namespace lamanchiral::chiral
