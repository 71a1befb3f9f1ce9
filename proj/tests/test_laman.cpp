#include <doctest.h>

#include "lamanchiral/chiral/golden.hpp"
#include "lamanchiral/errors.hpp"
#include "lamanchiral/laman/laman.hpp"

using namespace lamanchiral;
using namespace lamanchiral::laman;

namespace {

SimpleGraph k4() {
  return SimpleGraph({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
}

// K3,3: every vertex has degree 3, so no Type I' move can be undone.
SimpleGraph k33() {
  SimpleGraph before({"a", "b", "c", "x", "y"},
                     {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}, {"c", "x"}, {"c", "y"}, {"a", "b"}});
  REQUIRE(is_laman(before).laman);
  return apply_henneberg(before, HennebergType::II, {"a", "b", "c", "z"});
}

}  // namespace

TEST_SUITE("laman") {

TEST_CASE("Laman counts") {
  CHECK(is_laman(SimpleGraph({"o", "1"}, {{"1", "o"}})).laman);
  CHECK(is_laman(realize(chiral::golden::triangle_sequence())).laman);
  CHECK(is_laman(realize(chiral::golden::theta_sequence())).laman);
  CHECK(is_laman(realize(chiral::golden::threeloop_sequence())).laman);
  auto r = is_laman(k4());
  CHECK_FALSE(r.laman);
  CHECK(r.reason == "|E|=6 > 2|V|-3=5");
  // K4 plus a path 4-5-6-1: right edge count, overfull subgraph
  auto g = k4();
  g.add_vertex("5");
  g.add_edge("4", "5");
  g.add_vertex("6");
  g.add_edge("5", "6");
  g.add_edge("1", "6");
  r = is_laman(g);
  CHECK_FALSE(r.laman);
  CHECK(r.witness == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(r.reason == "subgraph {1,2,3,4} has |E'|=6 > 2|V'|-3=5");
  CHECK_THROWS_AS(is_laman(SimpleGraph({"1"}, {})), TooFewVertices);
}

TEST_CASE("Henneberg moves") {
  SimpleGraph e({"o", "1"}, {{"1", "o"}});
  auto i = apply_henneberg(e, HennebergType::I, {"o", "1", {}, "2"});
  CHECK(i.edges().size() == 3);
  auto ip = apply_henneberg(e, HennebergType::IPrime, {"1", "o", {}, "2"});
  CHECK(ip == i);
  CHECK_THROWS_AS(apply_henneberg(e, HennebergType::IPrime, {"1", "2", {}, "3"}), MissingEdge);
  CHECK_THROWS_AS(apply_henneberg(e, HennebergType::IPrime, {"1", "o", {}, "o"}), DuplicateVertex);
  auto tri = realize(chiral::golden::triangle_sequence());
  auto ii = apply_henneberg(tri, HennebergType::II, {"1", "2", "o", "3"});
  CHECK_FALSE(ii.has_edge("1", "2"));
  CHECK(ii.neighbors("3") == std::vector<std::string>{"1", "2", "o"});
  CHECK(is_laman(ii).laman);
}

TEST_CASE("realize reports the failing move") {
  HennebergSequence bad{"o", "1", {{{"1", "o"}, "2"}, {{"3", "o"}, "4"}}};
  CHECK_THROWS_WITH_AS(realize(bad), doctest::Contains("move 2"), MissingEdge);
  HennebergSequence dup{"o", "1", {{{"1", "o"}, "2"}, {{"2", "o"}, "1"}}};
  CHECK_THROWS_AS(realize(dup), DuplicateVertex);
}

TEST_CASE("Type I' recognition") {
  for (const auto& seq : {chiral::golden::triangle_sequence(), chiral::golden::theta_sequence(),
                          chiral::golden::threeloop_sequence()}) {
    auto g = realize(seq);
    auto found = find_type1prime_sequence(g, "o", {"1", "o"});
    CHECK(realize(found) == g);
  }
  // the reverse search returns the creation orientation: newer vertex first, o last
  auto theta = find_type1prime_sequence(realize(chiral::golden::theta_sequence()), "o", {"o", "1"});
  REQUIRE(theta.moves.size() == 2);
  CHECK(theta.moves[1].parent.second == "o");
  CHECK_THROWS_AS(find_type1prime_sequence(k4(), "1", {"1", "2"}), NotTypeIPrime);
  auto g = k33();
  CHECK(is_laman(g).laman);
  CHECK_THROWS_AS(find_type1prime_sequence(g, "a", {"a", "x"}), NotTypeIPrime);
  CHECK_THROWS_AS(find_type1prime_sequence(g, "a", {"a", "b"}), MissingEdge);
}

TEST_CASE("random sequences: every prefix is Laman and is recognized") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto seq = random_type1prime_sequence(2 + seed % 7, seed);
    for (std::size_t k = 0; k <= seq.moves.size(); ++k) {
      HennebergSequence prefix{seq.o, seq.v, {seq.moves.begin(), seq.moves.begin() + static_cast<long>(k)}};
      auto g = realize(prefix);
      REQUIRE(is_laman(g).laman);
      REQUIRE(realize(find_type1prime_sequence(g, "o", {"1", "o"})) == g);
    }
  }
}

}  // TEST_SUITE
