#include <doctest.h>

#include "lamanchiral/chiral/golden.hpp"
#include "lamanchiral/chiral/mu.hpp"
#include "lamanchiral/chiral/residue.hpp"
#include "lamanchiral/errors.hpp"

using namespace lamanchiral;
using namespace lamanchiral::chiral;
using alg::Poly;
using alg::Rational;

namespace {

// e^{-(l1|zf_1o)} up to degree n
Poly single_edge_series(unsigned n) {
  Poly a = -alg::dot2(alg::lambda_vec("1"), alg::zfrak_vec("1", "o"));
  Poly sum;
  for (unsigned m = 0; m <= n; ++m) sum += a.pow(m).scaled(1 / alg::factorial(m));
  return sum;
}

}  // namespace

TEST_SUITE("chiral") {

TEST_CASE("base state") {
  auto s = WeightState::base("o", "1");
  CHECK(s.G() == Poly(1));
  CHECK(s.f("1", {"1", "o"}) == Poly(-1));
  CHECK(s.f("1", {"o", "1"}) == Poly(1));
  CHECK(s.W() == -alg::dot2(alg::lambda_vec("1"), alg::zfrak_vec("1", "o")));
  CHECK(s.momentum_defect().empty());
  CHECK_THROWS_AS(WeightState::base("o", "o"), DuplicateVertex);
  CHECK_THROWS_AS(s.extend({"1", "2"}, "3"), MissingParentEdge);
  CHECK_THROWS_AS(s.extend({"1", "o"}, "1"), DuplicateVertex);
}

TEST_CASE("one and two loops") {
  auto tri = build_state(golden::triangle_sequence());
  CHECK(tri.W() == golden::triangle_W());
  CHECK(tri.G() == golden::triangle_G());
  CHECK(mu_constant(tri) == golden::triangle_mu());
  auto theta = build_state(golden::theta_sequence());
  CHECK(theta.G() == golden::theta_G());
  CHECK(mu_constant(theta) == golden::theta_mu());
}

TEST_CASE("truncated generating function") {
  laman::HennebergSequence edge{"o", "1", {}};
  CHECK(mu_truncated(edge, 4) == single_edge_series(4));
  auto tri = build_state(golden::triangle_sequence());
  CHECK(mu_truncated(tri, 0) == mu_constant(tri));
  for (unsigned n = 0; n <= 2; ++n) CHECK(mu_truncated(tri, n) == -triangle_oracle(n));
  CHECK_THROWS_AS(mu_truncated(edge, 7), TruncationTooLarge);
  Limits tight;
  tight.max_vertices = 3;
  CHECK_THROWS_AS(mu_constant(golden::theta_sequence(), tight), TruncationTooLarge);
}

TEST_CASE("momentum conservation after every move") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto seq = laman::random_type1prime_sequence(7, seed);
    auto s = WeightState::base(seq.o, seq.v);
    for (const auto& m : seq.moves) {
      s = s.extend(m.parent, m.fresh);
      REQUIRE_MESSAGE(s.momentum_defect().empty(), s.momentum_defect());
    }
  }
}

TEST_CASE("degree and balance of mu_constant") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto seq = laman::random_type1prime_sequence(2 + seed % 4, seed);
    Poly mu = mu_constant(build_state(seq));
    const unsigned moves = static_cast<unsigned>(seq.moves.size());
    for (const auto& t : mu.terms()) {
      unsigned first = 0, second = 0;
      for (const auto& [v, e] : t.mono.factors()) {
        REQUIRE(v.kind == alg::VarKind::Lambda);
        (v.component == 1 ? first : second) += e;
      }
      REQUIRE(first + second == 2 * moves);
      REQUIRE(first == second);
    }
  }
}

TEST_CASE("double triangle: both orders agree") {
  laman::HennebergSequence a{"o", "1", {{{"1", "o"}, "2"}, {{"1", "o"}, "3"}}};
  laman::HennebergSequence b{"o", "1", {{{"1", "o"}, "3"}, {{"1", "o"}, "2"}}};
  CHECK(mu_constant(a) == mu_constant(b));
}

TEST_CASE("three loops") {
  CHECK(mu_constant(golden::threeloop_sequence()) == golden::threeloop_F());
  CHECK(mu_constant(golden::threeloop_text_sequence()) == golden::threeloop_F({"1", "4", "2", "3"}));
}

TEST_CASE("d = 1 residue") {
  for (int n = 1; n <= 6; ++n) CHECK(residue_d1(Poly(1), n) == golden::d1_residue_of_one(n));
  CHECK(residue_d1(Poly(d1_z(1)), 1) == Poly(d1_w()));
  CHECK_THROWS_AS(residue_d1(Poly(1), 0), NonpositiveOrder);
  CHECK(residue_d1_dmodule_check(random_residue_samples(20, 7)).empty());
}

}  // TEST_SUITE
