// Walks the 24 two-element EDS: validity, nondegeneracy, corank, commutativity.
#include "eds/enumeration.hpp"

#include <cstdio>

using namespace eds;

int main() {
  std::printf("%-4s %-6s %-14s %-7s %s\n", "name", "valid", "nondegenerate", "corank", "commutative");
  for (auto& e : catalog2()) {
    auto nd = nondegeneracy(e);
    std::printf("%-4s %-6s %-14s %-7zu %s\n", e.label().c_str(), is_eds(e) ? "yes" : "no",
                nd.nondegenerate() ? "yes" : "no", nd.corank, is_commutative(e) ? "yes" : "no");
  }

  // The same 24 classes, found from scratch.
  EnumFilter f;
  f.up_to_iso = true;
  auto r = enumerate_eds(2, f);
  std::printf("\nenumerated: %zu structures, %zu classes\n", r.total, r.classes);

  f.nondegenerate_only = true;
  r = enumerate_eds(3, f);
  std::printf("three types, nondegenerate: %zu structures, %zu classes\n", r.total, r.classes);
}
