#pragma once

#include <cstdint>
#include <string>

#include <CLI11.hpp>

namespace lamanchiral::cli {

// Exit codes: 0 success, 1 verification mismatch, 2 input error.
inline constexpr int kOk = 0, kMismatch = 1, kInputError = 2;

struct VerifyOptions {
  std::string suite;
  std::string golden;
  unsigned order = 2;
  std::uint64_t seed = 20240611;
  unsigned count = 20;
  unsigned vertices = 8;
};

void add_verify(CLI::App& app, VerifyOptions& opts);
int run_verify(const VerifyOptions& opts);

}  // namespace lamanchiral::cli
