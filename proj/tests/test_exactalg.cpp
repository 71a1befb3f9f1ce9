#include <doctest.h>

#include "lamanchiral/alg/extform.hpp"
#include "lamanchiral/alg/kernels.hpp"
#include "lamanchiral/alg/matrix.hpp"
#include "lamanchiral/errors.hpp"
#include "support.hpp"

using namespace lamanchiral;
using alg::ExtForm;
using alg::Poly;
using alg::RatFun;
using alg::Rational;
using alg::Var;
using alg::kernels::Exec;
using testing::Rng;

namespace {

const Var l11 = Var::lambda("1", 1), l12 = Var::lambda("1", 2), l21 = Var::lambda("2", 1);
const Var r2 = Var::box_r(2), r3 = Var::box_r(3), s2 = Var::box_s(2);

std::map<Var, Rational> random_point(Rng& rng, const std::set<Var>& vars) {
  std::map<Var, Rational> pt;
  for (const auto& v : vars) pt[v] = testing::random_rational(rng, 7);
  return pt;
}

}  // namespace

TEST_SUITE("exactalg") {

TEST_CASE("canonical printing") {
  CHECK(Poly().to_string() == "0");
  CHECK(Poly(Rational(-3, 4)).to_string() == "-3/4");
  CHECK(alg::wedge2(alg::lambda_vec("1"), alg::lambda_vec("2")).to_string() == "l_1_1*l_2_2 - l_1_2*l_2_1");
  Poly p = Poly(r2).pow(2).scaled(Rational(1, 2)) - Poly(Var::zfrak("2", "o", 1)) + 1;
  CHECK(p.to_string() == "1/2*r2^2 - zf_2_o_1 + 1");
  // r10 sorts after r2 despite the string order of the digits
  CHECK(Var::box_r(2) < Var::box_r(10));
  CHECK((Poly(Var::box_r(10)) + Poly(Var::box_r(2))).to_string() == "r2 + r10");
}

TEST_CASE("rational parsing") {
  CHECK(alg::parse_rational("6/4") == Rational(3, 2));
  CHECK(alg::parse_rational("-7") == -7);
  CHECK_THROWS_AS(alg::parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(alg::parse_rational("1/-2"), InvalidInput);
  CHECK_THROWS_AS(alg::parse_rational("x"), InvalidInput);
  CHECK(alg::binomial(6, 2) == 15);
  CHECK(alg::factorial(5) == 120);
}

TEST_CASE("ring axioms on 1000 random triples") {
  Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    Poly a = testing::random_poly(rng), b = testing::random_poly(rng), c = testing::random_poly(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == Poly());
    REQUIRE(a * Poly(1) == a);
  }
}

TEST_CASE("substitution commutes with evaluation") {
  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    Poly p = testing::random_poly(rng), q1 = testing::random_poly(rng, 3, 2), q2 = testing::random_poly(rng, 3, 2);
    Poly sub = p.substitute({{l11, q1}, {r2, q2}});
    std::set<Var> vars = p.variables();
    for (const auto& v : q1.variables()) vars.insert(v);
    for (const auto& v : q2.variables()) vars.insert(v);
    auto pt = random_point(rng, vars);
    auto inner = pt;
    inner[l11] = q1.evaluate(pt).constant_term();
    inner[r2] = q2.evaluate(pt).constant_term();
    REQUIRE(sub.evaluate(pt) == p.evaluate(inner));
  }
}

TEST_CASE("box integration") {
  CHECK(Poly(r2).pow(3).box_integrate({r2}) == Poly(Rational(1, 4)));
  CHECK((Poly(r2) * Poly(s2)).box_integrate({r2, s2}) == Poly(Rational(1, 4)));
  CHECK((Poly(r2) * Poly(l11)).box_integrate({r2}) == Poly(l11).scaled(Rational(1, 2)));
  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    Poly a = testing::random_poly(rng), b = testing::random_poly(rng);
    Rational c = testing::random_rational(rng);
    REQUIRE((a.scaled(c) + b).box_integrate({r2, s2}) ==
            a.box_integrate({r2, s2}).scaled(c) + b.box_integrate({r2, s2}));
    // Fubini for disjoint box variables
    Poly f = a.substitute({{r3, Poly(0)}}), g = b.substitute({{r2, Poly(0)}, {s2, Poly(0)}});
    REQUIRE((f * g).box_integrate({r2, s2, r3}) == f.box_integrate({r2, s2}) * g.box_integrate({r3}));
  }
}

TEST_CASE("kernels: serial reference equals OpenMP") {
  Rng rng(14);
  for (int k = 0; k < 50; ++k) {
    Poly a = testing::random_poly(rng, 12, 4), b = testing::random_poly(rng, 12, 4);
    REQUIRE(alg::kernels::multiply(a, b, Exec::Serial) == alg::kernels::multiply(a, b, Exec::Parallel));
    std::map<Var, Poly> images{{l12, b}, {s2, Poly(1) - Poly(s2)}};
    REQUIRE(alg::kernels::substitute(a, images, Exec::Serial) == alg::kernels::substitute(a, images, Exec::Parallel));
    REQUIRE(alg::kernels::box_integrate(a, {r2, s2}, Exec::Serial) ==
            alg::kernels::box_integrate(a, {r2, s2}, Exec::Parallel));
    REQUIRE(alg::kernels::sum({a, b, -a}, Exec::Serial) == alg::kernels::sum({a, b, -a}, Exec::Parallel));
  }
  // large enough to take the parallel path of operator*
  Poly big = (Poly(l11) + Poly(l12) + Poly(l21) + Poly(r2) + Poly(s2) + 1).pow(5);
  CHECK(big.size() > 200);
  CHECK(big * big == alg::kernels::multiply(big, big, Exec::Serial));
}

TEST_CASE("RatFun equality ignores representation") {
  Poly x(l11), y(l12);
  RatFun a = RatFun::quotient(x, x + y);
  RatFun b = RatFun::quotient(x * (x - y), (x + y) * (x - y));
  CHECK(a == b);
  CHECK(a + RatFun::quotient(y, x + y) == RatFun(1));
  CHECK((a * a.inverse()) == RatFun(1));
  CHECK(RatFun::quotient(x * x, x).simplified().is_polynomial());
  // quotient rule: (f/g)' g^2 = f' g - f g'
  Rng rng(15);
  for (int k = 0; k < 50; ++k) {
    Poly f = testing::random_poly(rng), g = testing::random_poly(rng) + Poly(l11) * Poly(l11) + 1;
    RatFun q = RatFun::quotient(f, g);
    REQUIRE(q.derivative(l11) * RatFun(g * g) == RatFun(f.derivative(l11) * g - f * g.derivative(l11)));
  }
  CHECK_THROWS_AS(a.evaluate({{l11, Rational(1)}, {l12, Rational(-1)}}), InvalidInput);
}

TEST_CASE("ExtForm: graded commutativity and d^2 = 0") {
  Rng rng(16);
  auto random_form = [&](int degree) {
    static const std::vector<Var> gens{l11, l12, l21, r2};
    ExtForm f;
    for (int k = 0; k < 3; ++k) {
      std::vector<Var> w;
      std::vector<Var> pool = gens;
      std::shuffle(pool.begin(), pool.end(), rng);
      w.assign(pool.begin(), pool.begin() + degree);
      f += ExtForm::word(w, RatFun(testing::random_poly(rng, 3, 2)));
    }
    return f;
  };
  for (int k = 0; k < 100; ++k) {
    int p = static_cast<int>(rng() % 3), q = static_cast<int>(rng() % 3);
    ExtForm a = random_form(p), b = random_form(q);
    ExtForm sign = ((p * q) % 2) ? ExtForm(-1) : ExtForm(1);
    REQUIRE(a * b == sign * (b * a));
    const std::vector<Var> along{l11, l12, l21, r2};
    REQUIRE(a.differential(along).differential(along).is_zero());
    ExtForm sign_a = p % 2 ? ExtForm(-1) : ExtForm(1);
    REQUIRE((a * b).differential(along) == a.differential(along) * b + sign_a * (a * b.differential(along)));
  }
  CHECK(ExtForm::word({l12, l11}) == -ExtForm::word({l11, l12}));
  CHECK(ExtForm::word({l11, l11}).is_zero());
}

TEST_CASE("determinant and adjugate") {
  Rng rng(17);
  for (int k = 0; k < 20; ++k) {
    alg::Matrix<Poly> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = testing::random_poly(rng, 2, 1);
    // cofactor expansion along the first row
    Poly expanded;
    for (std::size_t j = 0; j < 3; ++j) {
      Poly minor = alg::determinant(m.minor(0, j));
      expanded += (j % 2 ? -m(0, j) : m(0, j)) * minor;
    }
    REQUIRE(alg::determinant(m) == expanded);
    auto adj = alg::adjugate(m, Exec::Parallel);
    REQUIRE(adj == alg::adjugate(m, Exec::Serial));
    Poly det = alg::determinant(m);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Poly entry;
        for (std::size_t l = 0; l < 3; ++l) entry += m(i, l) * adj(l, j);
        REQUIRE(entry == (i == j ? det : Poly()));
      }
  }
}

}  // TEST_SUITE
