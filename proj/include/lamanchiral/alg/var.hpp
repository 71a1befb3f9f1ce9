#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lamanchiral::alg {

// Declaration order is the global variable order (most significant first).
enum class VarKind : std::uint8_t { Lambda, Zfrak, BoxR, BoxS, Z, Zbar, TWeight, WCoord, Aux };

struct Var {
  VarKind kind = VarKind::Aux;
  std::string a;  // vertex, edge tail, edge id, move index or aux name
  std::string b;  // edge head for Zfrak, empty otherwise
  int component = 0;

  static Var lambda(std::string v, int s) { return {VarKind::Lambda, std::move(v), {}, s}; }
  static Var zfrak(std::string tail, std::string head, int s) {
    return {VarKind::Zfrak, std::move(tail), std::move(head), s};
  }
  static Var box_r(int k) { return {VarKind::BoxR, pad_index(k), {}, 0}; }
  static Var box_s(int k) { return {VarKind::BoxS, pad_index(k), {}, 0}; }
  static Var z(std::string v, int s) { return {VarKind::Z, std::move(v), {}, s}; }
  static Var zbar(std::string v, int s) { return {VarKind::Zbar, std::move(v), {}, s}; }
  static Var t(std::string edge) { return {VarKind::TWeight, std::move(edge), {}, 0}; }
  static Var w(int s = 0) { return {VarKind::WCoord, {}, {}, s}; }
  static Var aux(std::string name) { return {VarKind::Aux, std::move(name), {}, 0}; }

  bool is_box() const { return kind == VarKind::BoxR || kind == VarKind::BoxS; }
  int move_index() const { return std::stoi(a); }

  std::string name() const;

  friend auto operator<=>(const Var&, const Var&) = default;
  friend bool operator==(const Var&, const Var&) = default;

 private:
  // Zero-padded so that r2 < r10 under plain string comparison.
  static std::string pad_index(int k);
};

}  // namespace lamanchiral::alg
