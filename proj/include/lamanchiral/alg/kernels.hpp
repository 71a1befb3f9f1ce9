#pragma once

#include <map>
#include <vector>

#include "lamanchiral/alg/poly.hpp"

// Hot loops of the polynomial core, each in two versions:
//   serial   - ordered-map accumulation, kept as the reference implementation
//   parallel - OpenMP over term blocks, sorted partial results merged pairwise
// Both return canonical polynomials, so results compare with ==.
namespace lamanchiral::alg::kernels {

enum class Exec { Serial, Parallel };

Poly multiply(const Poly& a, const Poly& b, Exec exec);
Poly substitute(const Poly& p, const std::map<Var, Poly>& images, Exec exec);
Poly box_integrate(const Poly& p, const std::vector<Var>& vars, Exec exec);
Poly sum(std::vector<Poly> parts, Exec exec);

// Work (in term pairs) below which Poly's operators stay serial.
inline constexpr std::size_t parallel_threshold = 4096;

}  // namespace lamanchiral::alg::kernels
