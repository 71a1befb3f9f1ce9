#include <iostream>

#include "commands.hpp"
#include "lamanchiral/chiral/golden.hpp"
#include "lamanchiral/chiral/residue.hpp"
#include "lamanchiral/chiral/weight_state.hpp"
#include "lamanchiral/jouanolou/jouanolou.hpp"

namespace lamanchiral::cli {

namespace {

int report(const jouanolou::Certificate& c) {
  if (c.ok) {
    std::cout << "OK (lhs " << c.lhs_terms << " terms, rhs " << c.rhs_terms << " terms)\n";
    return kOk;
  }
  std::cout << "MISMATCH: " << c.detail << "\n";
  return kMismatch;
}

int verify_golden(const std::string& name) {
  int code = kOk;
  for (const auto& check : chiral::golden::run(name)) {
    std::cout << (check.ok ? "OK " : "MISMATCH ") << check.name << ": " << check.detail << "\n";
    if (!check.ok) code = kMismatch;
  }
  return code;
}

int verify_momentum(const VerifyOptions& opts) {
  for (unsigned k = 0; k < opts.count; ++k) {
    auto seq = laman::random_type1prime_sequence(opts.vertices, opts.seed + k);
    auto state = chiral::WeightState::base(seq.o, seq.v);
    for (std::size_t m = 0; m < seq.moves.size(); ++m) {
      state = state.extend(seq.moves[m].parent, seq.moves[m].fresh);
      if (auto defect = state.momentum_defect(); !defect.empty()) {
        std::cout << "MISMATCH: sequence " << k << ", move " << m + 1 << ": " << defect << "\n";
        return kMismatch;
      }
    }
  }
  std::cout << "OK (" << opts.count << " sequences)\n";
  return kOk;
}

}  // namespace

void add_verify(CLI::App& app, VerifyOptions& opts) {
  auto* verify = app.add_subcommand("verify", "Check identities and pinned values exactly");
  verify->require_subcommand(1);
  verify->add_subcommand("arnold", "Arnold relation among three propagators")
      ->callback([&] { opts.suite = "arnold"; });
  verify->add_subcommand("arnold-cor", "Triple product as an exact form")
      ->callback([&] { opts.suite = "arnold-cor"; });
  auto* gs = verify->add_subcommand("genseries", "Taylor coefficients of the propagator generating series");
  gs->add_option("--order", opts.order, "Total order in zf")->check(CLI::Range(0u, 6u));
  gs->callback([&] { opts.suite = "genseries"; });
  auto* golden = verify->add_subcommand("golden", "Pinned one-, two-, three-loop and d=1 values");
  golden->add_option("name", opts.golden)->required()->check(CLI::IsMember(chiral::golden::names()));
  golden->callback([&] { opts.suite = "golden"; });
  auto* residue = verify->add_subcommand("residue", "d=1 D-module rules on random inputs");
  residue->add_option("--seed", opts.seed);
  residue->add_option("--count", opts.count);
  residue->callback([&] { opts.suite = "residue"; });
  auto* momentum = verify->add_subcommand("momentum", "Momentum conservation on random sequences");
  momentum->add_option("--seed", opts.seed);
  momentum->add_option("--count", opts.count);
  momentum->add_option("--vertices", opts.vertices)->check(CLI::Range(2u, 30u));
  momentum->callback([&] { opts.suite = "momentum"; });
}

int run_verify(const VerifyOptions& opts) {
  if (opts.suite == "arnold") return report(jouanolou::verify_arnold());
  if (opts.suite == "arnold-cor") return report(jouanolou::verify_arnold_corollary());
  if (opts.suite == "genseries") return report(jouanolou::generating_series_check(opts.order));
  if (opts.suite == "golden") return verify_golden(opts.golden);
  if (opts.suite == "momentum") return verify_momentum(opts);
  // residue
  auto failure = chiral::residue_d1_dmodule_check(chiral::random_residue_samples(opts.count, opts.seed));
  if (!failure.empty()) {
    std::cout << "MISMATCH: " << failure << "\n";
    return kMismatch;
  }
  std::cout << "OK (" << opts.count << " samples)\n";
  return kOk;
}

}  // namespace lamanchiral::cli
