#include "superell/limits.hpp"

#include <cstdlib>
#include <string>

namespace superell {
namespace {

void apply_env(Limits& l) {
  if (const char* v = std::getenv("SUPERELL_LIMIT_POINTS")) {
    l.point_count = std::stoull(v);
  }
  if (const char* v = std::getenv("SUPERELL_LIMIT_CENSUS")) {
    l.census = std::stoull(v);
  }
}

}  // namespace

Limits& limits() {
  static Limits instance = [] {
    Limits l;
    apply_env(l);
    return l;
  }();
  return instance;
}

void reload_limits_from_env() { apply_env(limits()); }

}  // namespace superell
