#include "lamanchiral/alg/var.hpp"

#include <cstdio>

namespace lamanchiral::alg {

std::string Var::pad_index(int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", k);
  return buf;
}

std::string Var::name() const {
  auto comp = [this] { return "_" + std::to_string(component); };
  switch (kind) {
    case VarKind::Lambda: return "l_" + a + comp();
    case VarKind::Zfrak: return "zf_" + a + "_" + b + comp();
    case VarKind::BoxR: return "r" + std::to_string(move_index());
    case VarKind::BoxS: return "s" + std::to_string(move_index());
    case VarKind::Z: return "z_" + a + comp();
    case VarKind::Zbar: return "zb_" + a + comp();
    case VarKind::TWeight: return "t_" + a;
    case VarKind::WCoord: return component == 0 ? std::string("w") : "w_" + std::to_string(component);
    case VarKind::Aux: return a;
  }
  return a;
}

}  // namespace lamanchiral::alg
