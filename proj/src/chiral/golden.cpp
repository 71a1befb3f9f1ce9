#include "lamanchiral/chiral/golden.hpp"

#include <sstream>

#include "lamanchiral/chiral/mu.hpp"
#include "lamanchiral/chiral/residue.hpp"
#include "lamanchiral/chiral/weight_state.hpp"
#include "lamanchiral/errors.hpp"

namespace lamanchiral::chiral::golden {

using alg::dot2;
using alg::lambda_vec;
using alg::zfrak_vec;

namespace {

// The 28 terms of F; wAB is lambda_A ∧ lambda_B.
constexpr const char* kF =
    "+1/864 w12^3 +1/96 w13 w23^2 -1/96 w14^2 w23 +1/96 w14 w23^2 -1/96 w13 w24^2 "
    "-1/96 w14^2 w24 +1/96 w13^2 w24 -1/8 w13 w24 w34 +1/48 w14 w23 w24 -1/48 w14 w24 w34 "
    "-1/96 w13 w24 w12 -1/48 w13 w23 w34 +1/16 w14 w23 w34 -1/48 w13 w14 w24 "
    "+1/48 w13 w23 w24 +1/144 w13 w14 w12 -1/48 w13 w14 w23 -1/96 w13 w23 w12 "
    "-1/96 w14 w23 w12 -1/96 w14 w24 w12 +1/144 w23 w24 w12 -1/288 w24 w12^2 "
    "+7/96 w34^2 w12 -1/288 w23 w12^2 +1/288 w14^2 w12 +1/288 w12^2 w14 "
    "+1/288 w12^2 w13 +1/288 w23^2 w12";

Check check(std::string name, const Poly& actual, const Poly& expected) {
  std::string diff = first_difference(actual, expected);
  if (diff.empty()) return {std::move(name), true, std::to_string(actual.size()) + " terms"};
  return {std::move(name), false, diff};
}

}  // namespace

laman::HennebergSequence triangle_sequence() { return {"o", "1", {{{"1", "o"}, "2"}}}; }

laman::HennebergSequence theta_sequence() { return {"o", "1", {{{"1", "o"}, "2"}, {{"2", "o"}, "3"}}}; }

laman::HennebergSequence threeloop_sequence() {
  return {"o", "1", {{{"1", "o"}, "3"}, {{"3", "o"}, "4"}, {{"4", "o"}, "2"}}};
}

laman::HennebergSequence threeloop_text_sequence() {
  return {"o", "1", {{{"1", "o"}, "2"}, {{"2", "o"}, "3"}, {{"3", "o"}, "4"}}};
}

Poly lambda_wedge(const std::string& a, const std::string& b) {
  return alg::wedge2(lambda_vec(a), lambda_vec(b));
}

Poly triangle_W() {
  const Poly r(alg::Var::box_r(2)), s(alg::Var::box_s(2));
  const auto l1 = lambda_vec("1"), l2 = lambda_vec("2");
  const auto loop = zfrak_vec("2", "o") - zfrak_vec("2", "1") - zfrak_vec("1", "o");
  return -dot2(l1, zfrak_vec("1", "o")) - dot2(l2, zfrak_vec("2", "o")) - (1 - r) * dot2(l1, loop) +
         r * (1 - s) * dot2(l2, loop);
}

Poly triangle_G() { return Poly(alg::Var::box_r(2)) * lambda_wedge("1", "2"); }

Poly triangle_mu() { return lambda_wedge("1", "2").scaled(alg::Rational(1, 2)); }

Poly theta_G() {
  const Poly r2(alg::Var::box_r(2)), s2(alg::Var::box_s(2)), r3(alg::Var::box_r(3)), s3(alg::Var::box_s(3));
  const auto l1 = lambda_vec("1"), l2 = lambda_vec("2"), l3 = lambda_vec("3");
  const Poly left = alg::wedge2((1 - r2) * l1 + (1 - r2 * (1 - s2)) * l2, l3);
  const Poly right = alg::wedge2(l1, l2 + (1 - s3) * l3);
  return -(left * r3 * r2 * right);
}

Poly theta_mu() {
  const auto l1 = lambda_vec("1"), l2 = lambda_vec("2"), l3 = lambda_vec("3");
  return (alg::wedge2(l1, l3 + Poly(2) * l2) * alg::wedge2(l3, l1 + Poly(2) * l2)).scaled(alg::Rational(1, 24));
}

Poly threeloop_F(const std::array<std::string, 4>& labels) {
  std::istringstream in(kF);
  Poly result, term;
  std::string token;
  bool open = false;
  while (in >> token) {
    if (token[0] == '+' || token[0] == '-') {
      if (open) result += term;
      term = Poly(alg::parse_rational(token.substr(token[0] == '+' ? 1 : 0)));
      open = true;
      continue;
    }
    // wAB or wAB^e
    Poly factor = lambda_wedge(labels[token[1] - '1'], labels[token[2] - '1']);
    unsigned e = token.size() > 3 ? static_cast<unsigned>(token[4] - '0') : 1;
    term = term * factor.pow(e);
  }
  if (open) result += term;
  return result;
}

Poly d1_residue_of_one(int n) {
  return Poly(d1_lambda()).pow(static_cast<unsigned>(n - 1)).scaled(1 / alg::factorial(static_cast<unsigned>(n - 1)));
}

std::string first_difference(const Poly& actual, const Poly& expected) {
  const Poly diff = actual - expected;
  if (diff.is_zero()) return {};
  const auto& m = diff.leading().mono;
  auto coeff = [&](const Poly& p) {
    for (const auto& t : p.terms())
      if (t.mono == m) return alg::to_string(t.coeff);
    return std::string("0");
  };
  return "term " + m.to_string() + ": got " + coeff(actual) + ", expected " + coeff(expected);
}

std::vector<std::string> names() { return {"triangle", "theta", "threeloop", "d1"}; }

std::vector<Check> run(const std::string& name) {
  std::vector<Check> out;
  if (name == "triangle") {
    const auto state = build_state(triangle_sequence());
    out.push_back(check("triangle W", state.W(), triangle_W()));
    out.push_back(check("triangle G", state.G(), triangle_G()));
    out.push_back(check("triangle mu", mu_constant(state), triangle_mu()));
    // The closed form carries the opposite global sign.
    for (unsigned n = 0; n <= 2; ++n)
      out.push_back(check("triangle N=" + std::to_string(n), mu_truncated(state, n), -triangle_oracle(n)));
  } else if (name == "theta") {
    const auto state = build_state(theta_sequence());
    out.push_back(check("theta G", state.G(), theta_G()));
    out.push_back(check("theta mu", mu_constant(state), theta_mu()));
  } else if (name == "threeloop") {
    out.push_back(check("threeloop F", mu_constant(build_state(threeloop_sequence())), threeloop_F()));
    out.push_back(check("threeloop relabeled", mu_constant(build_state(threeloop_text_sequence())),
                        threeloop_F({"1", "4", "2", "3"})));
  } else if (name == "d1") {
    for (int n = 1; n <= 6; ++n)
      out.push_back(check("d1 n=" + std::to_string(n), residue_d1(Poly(1), n), d1_residue_of_one(n)));
  } else {
    throw InvalidInput("unknown golden \"" + name + "\" (expected triangle, theta, threeloop or d1)");
  }
  return out;
}

}  // namespace lamanchiral::chiral::golden
