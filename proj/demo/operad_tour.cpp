// Operadic compositions, associative elements over F_5 and the Koszul dual in arity 3.
#include "eds/io.hpp"

#include <iostream>

using namespace eds;

int main() {
  auto e = catalog_entry("F4");
  const auto id = TypedTree::corolla();
  std::cout << "≺_0 ∘ (≺_1, I) on F4 =\n" << format_tree_poly(compose(e, right_comb(0), {right_comb(1), id}));

  auto sols = solve_associative_fp<5>(e);
  std::cout << "\nassociative elements of P(2) over F_5 on F4: " << sols.size() << "\n";
  // one representative per line: leading coefficient 1
  for (auto& m : sols)
    if (!m.is_zero() && m.coefficients().begin()->second.value() == 1) std::cout << "  " << format_arity2(m) << "\n";

  std::cout << "\ndim P^!(3):\n";
  for (auto lbl : {"A1", "C2", "F3", "H2"}) {
    auto x = catalog_entry(lbl);
    std::cout << "  " << lbl << " " << koszul_dual_dim3(x) << " (corank " << corank(x) << ")\n";
  }
}
