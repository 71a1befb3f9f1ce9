#pragma once

#include <array>
#include <string>
#include <vector>

#include "lamanchiral/alg/poly.hpp"
#include "lamanchiral/laman/laman.hpp"

// Pinned reference values: the one-, two- and three-loop chiral operations
// and the d = 1 residues, plus the sequences that produce them.
namespace lamanchiral::chiral::golden {

using alg::Poly;

laman::HennebergSequence triangle_sequence();
laman::HennebergSequence theta_sequence();
// Labels of the reference polynomial F: 3 and 4 split {1,o} and {3,o}, then 2 splits {4,o}.
laman::HennebergSequence threeloop_sequence();
// The same graph built 2, 3, 4 along {1,o}, {2,o}, {3,o}.
laman::HennebergSequence threeloop_text_sequence();

Poly lambda_wedge(const std::string& a, const std::string& b);

Poly triangle_W();
Poly triangle_G();
Poly triangle_mu();
Poly theta_G();
Poly theta_mu();
// F with lambda_k replaced by lambda_{labels[k-1]}.
Poly threeloop_F(const std::array<std::string, 4>& labels = {"1", "2", "3", "4"});
// 1/(n-1)! lambda_1^{n-1}
Poly d1_residue_of_one(int n);

// "" when equal, otherwise the first differing monomial with both coefficients.
std::string first_difference(const Poly& actual, const Poly& expected);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<std::string> names();  // triangle theta threeloop d1
// Throws InvalidInput for an unknown name.
std::vector<Check> run(const std::string& name);

}  // namespace lamanchiral::chiral::golden
