#include "lamanchiral/limits.hpp"

#include <cstdlib>
#include <string>

#include "lamanchiral/errors.hpp"

namespace lamanchiral {

Limits Limits::from_env() {
  Limits l;
  if (const char* s = std::getenv("LAMANCHIRAL_MAX_VERTICES"); s && *s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(s).size() || v < 2 || v > 30)
      throw InvalidInput(std::string("LAMANCHIRAL_MAX_VERTICES must be an integer in [2, 30], got \"") + s + "\"");
    l.max_vertices = v;
  }
  return l;
}

}  // namespace lamanchiral
