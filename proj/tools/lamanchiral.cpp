#include <iostream>
#include <optional>
#include <sstream>

#include "commands.hpp"
#include "lamanchiral/chiral/mu.hpp"
#include "lamanchiral/errors.hpp"
#include "lamanchiral/graphs/laplacian.hpp"
#include "lamanchiral/io/json_io.hpp"
#include "lamanchiral/limits.hpp"

namespace lamanchiral::cli {

namespace {

struct Options {
  std::string verb;
  std::string input;
  std::string weights;
  std::string base;      // graph-check: base vertex o
  std::string base_to;   // graph-check: other end of the base edge
  bool constant = false;
  std::optional<unsigned> order;
  std::string format = "text";
};

graphs::EdgeWeights load_weights(const Options& opts, const graphs::DirectedGraph& g) {
  if (opts.weights.empty()) return graphs::EdgeWeights::symbolic(g);
  return io::parse_weights(io::read_json_file(opts.weights), g);
}

std::string show(const alg::RatFun& f) { return f.simplified().to_string(); }

int graph_check(const Options& opts) {
  auto g = io::to_simple_graph(io::parse_graph(io::read_json_file(opts.input)));
  auto report = laman::is_laman(g);
  if (!report.laman) {
    std::cout << "NOT LAMAN: " << report.reason << "\n";
    return kOk;
  }
  std::cout << "LAMAN\n";
  std::string o = opts.base;
  if (o.empty()) o = g.has_vertex("o") ? "o" : *g.vertices().begin();
  std::string v = opts.base_to;
  if (v.empty()) {
    auto nb = g.neighbors(o);
    if (nb.empty()) throw MissingEdge("base vertex \"" + o + "\" has no edges");
    v = nb.front();
  }
  try {
    auto seq = laman::find_type1prime_sequence(g, o, {o, v});
    std::cout << "TYPE I': " << io::sequence_to_json(seq).dump() << "\n";
  } catch (const NotTypeIPrime& e) {
    std::cout << "NOT TYPE I': " << e.what() << "\n";
  }
  return kOk;
}

int graph_trees(const Options& opts) {
  auto g = io::parse_graph(io::read_json_file(opts.input));
  g.require_connected();
  auto trees = graphs::spanning_trees(g);
  for (const auto& t : trees) {
    std::cout << "{";
    for (std::size_t k = 0; k < t.size(); ++k) std::cout << (k ? "," : "") << t[k];
    std::cout << "}\n";
  }
  std::cout << "count: " << trees.size() << "\n";
  std::cout << "tree polynomial: " << graphs::tree_polynomial(g, load_weights(opts, g)).to_string() << "\n";
  return kOk;
}

int graph_laplacian(const Options& opts) {
  auto g = io::parse_graph(io::read_json_file(opts.input));
  g.require_connected();
  auto w = load_weights(opts, g);
  auto m = graphs::weighted_laplacian(g, w);
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << "M[" << vs[i] << "," << vs[j] << "] = " << show(m(i, j)) << "\n";
  auto det = alg::determinant(m), kirchhoff = graphs::kirchhoff_det(g, w);
  if (!(det == kirchhoff)) {
    std::cout << "MISMATCH: det M = " << show(det) << " but the tree sum gives " << show(kirchhoff) << "\n";
    return kMismatch;
  }
  std::cout << "det = " << show(det) << "\n";
  auto inv = graphs::laplacian_inverse(g, w);
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j)
      std::cout << "Minv[" << vs[i] << "," << vs[j] << "] = " << show(inv(i, j)) << "\n";
  return kOk;
}

int graph_green(const Options& opts) {
  auto g = io::parse_graph(io::read_json_file(opts.input));
  g.require_connected();
  auto w = load_weights(opts, g);
  auto green = graphs::green_function(g, w), cuts = graphs::green_function_cuts(g, w);
  const auto& vs = g.vertices();
  const auto& es = g.edges();
  for (std::size_t e = 0; e < green.rows(); ++e)
    for (std::size_t i = 0; i < green.cols(); ++i) {
      if (!(green(e, i) == cuts(e, i))) {
        std::cout << "MISMATCH: dinv[" << es[e].id << "," << vs[i] << "] = " << show(green(e, i))
                  << " but the cut form gives " << show(cuts(e, i)) << "\n";
        return kMismatch;
      }
      std::cout << "dinv[" << es[e].id << "," << vs[i] << "] = " << show(green(e, i)) << "\n";
    }
  return kOk;
}

int weight(const Options& opts) {
  if (opts.constant == opts.order.has_value()) throw InvalidInput("weight: give exactly one of --constant or --order N");
  auto seq = io::parse_sequence(io::read_json_file(opts.input));
  const auto limits = Limits::from_env();
  alg::Poly p = opts.constant ? chiral::mu_constant(seq, limits) : chiral::mu_truncated(seq, *opts.order, limits);
  if (opts.format == "json")
    std::cout << io::poly_to_json(p).dump() << "\n";
  else
    std::cout << p.to_string() << "\n";
  return kOk;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact chiral operations of Laman graphs"};
  app.require_subcommand(1);
  Options opts;
  VerifyOptions vopts;

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", opts.input, what)->required();
    sub->callback([&opts, sub] { opts.verb = sub->get_name(); });
    return sub;
  };
  auto* check = input(app.add_subcommand("graph-check", "Laman test and a Type I' sequence"), "graph JSON");
  check->add_option("--base", opts.base, "base vertex o");
  check->add_option("--edge-to", opts.base_to, "other end of the base edge");
  input(app.add_subcommand("graph-trees", "Spanning trees and the tree polynomial"), "graph JSON")
      ->add_option("--weights", opts.weights, "weights JSON (default: symbolic)");
  input(app.add_subcommand("graph-laplacian", "Weighted Laplacian, determinant and inverse"), "graph JSON")
      ->add_option("--weights", opts.weights, "weights JSON (default: symbolic)");
  input(app.add_subcommand("graph-green", "Green's function d^{-1}"), "graph JSON")
      ->add_option("--weights", opts.weights, "weights JSON (default: symbolic)");
  auto* w = input(app.add_subcommand("weight", "Chiral operation of a Type I' sequence"), "sequence JSON");
  w->add_flag("--constant", opts.constant, "box integral of G");
  w->add_option("--order", opts.order, "generating function truncated at zf-degree N");
  w->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
  add_verify(app, vopts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (opts.verb == "graph-check") return graph_check(opts);
    if (opts.verb == "graph-trees") return graph_trees(opts);
    if (opts.verb == "graph-laplacian") return graph_laplacian(opts);
    if (opts.verb == "graph-green") return graph_green(opts);
    if (opts.verb == "weight") return weight(opts);
    return run_verify(vopts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const VerificationFailure& e) {
    std::cout << "MISMATCH: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace lamanchiral::cli

int main(int argc, char** argv) { return lamanchiral::cli::run(argc, argv); }
