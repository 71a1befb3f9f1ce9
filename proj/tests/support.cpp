#include "support.hpp"

#include "lamanchiral/jouanolou/jouanolou.hpp"

namespace lamanchiral::testing {

using alg::Poly;
using alg::Rational;
using alg::Var;

Rational random_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Rational random_positive_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> d(1, bound);
  Rational q(d(rng), d(rng));
  q.canonicalize();
  return q;
}

Poly random_poly(Rng& rng, int max_terms, unsigned max_degree) {
  static const std::vector<Var> pool{Var::lambda("1", 1), Var::lambda("1", 2), Var::lambda("2", 1),
                                     Var::zfrak("1", "o", 1), Var::zfrak("2", "1", 2), Var::box_r(2),
                                     Var::box_s(2), Var::box_r(3), Var::t("e1")};
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Poly p;
  for (int k = nterms(rng); k > 0; --k) {
    std::vector<alg::Monomial::Factor> fs;
    for (unsigned d = deg(rng); d > 0; --d) fs.push_back({pool[pick(rng)], 1});
    p += Poly(alg::Monomial::from_factors(fs), random_rational(rng));
  }
  return p;
}

alg::ExtForm random_jouanolou_element(Rng& rng) {
  using namespace jouanolou;
  std::uniform_int_distribution<int> kind(0, 4), comp(1, 2), len(1, 2), count(1, 2);
  auto atom = [&]() -> alg::ExtForm {
    int s = comp(rng);
    switch (kind(rng)) {
      case 0: return gen_x("1", "2", s);
      case 1: return gen_dx("1", "2", s);
      case 2: return z("1", s);
      case 3: return zbar("2", s);
      default: return alg::ExtForm(alg::RatFun(random_rational(rng)));
    }
  };
  alg::ExtForm sum;
  for (int k = count(rng); k > 0; --k) {
    alg::ExtForm prod(alg::RatFun(random_rational(rng)));
    for (int m = len(rng); m > 0; --m) prod = (prod * atom()).simplified();
    sum += prod;
  }
  return sum.simplified();
}

namespace {

// Multisets of size k over {0..types-1}, as non-decreasing sequences.
void multisets(std::size_t types, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t t = from; t < types; ++t) {
    cur.push_back(t);
    multisets(types, k, t, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<graphs::DirectedGraph> graph_catalog(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<graphs::DirectedGraph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::vector<std::string> vs;
    for (std::size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    for (std::size_t k = n - 1; k <= max_edges; ++k) {
      std::vector<std::vector<std::size_t>> choices;
      std::vector<std::size_t> cur;
      multisets(pairs.size(), k, 0, cur, choices);
      for (const auto& choice : choices) {
        std::vector<graphs::DirectedEdge> es;
        for (std::size_t e = 0; e < choice.size(); ++e) {
          auto [a, b] = pairs[choice[e]];
          bool flip = e > 0 && choice[e - 1] == choice[e] && es.back().tail == vs[a];
          es.push_back({"e" + std::to_string(e + 1), flip ? vs[b] : vs[a], flip ? vs[a] : vs[b]});
        }
        graphs::DirectedGraph g(vs, es);
        if (g.is_connected()) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

graphs::DirectedGraph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
  std::size_t n = nv(rng);
  std::vector<std::string> vs;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  std::bernoulli_distribution coin(0.5);
  std::vector<graphs::DirectedEdge> es;
  auto add = [&](std::size_t a, std::size_t b) {
    if (coin(rng)) std::swap(a, b);
    es.push_back({"e" + std::to_string(es.size() + 1), vs[a], vs[b]});
  };
  for (std::size_t i = 1; i < n; ++i) add(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  std::size_t extra = std::uniform_int_distribution<std::size_t>(0, max_edges - (n - 1))(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (extra > 0) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    add(a, b);
    --extra;
  }
  return graphs::DirectedGraph(vs, es);
}

graphs::EdgeWeights random_weights(Rng& rng, const graphs::DirectedGraph& g) {
  graphs::EdgeWeights w;
  for (const auto& e : g.edges()) w.set(e.id, random_positive_rational(rng));
  return w;
}

}  // namespace lamanchiral::testing
