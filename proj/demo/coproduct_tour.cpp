// Coproducts of typed trees and words, and where the closed formulas stop working.
#include "eds/io.hpp"

#include <iostream>

using namespace eds;

int main() {
  using Ext = ExtendedElement<TypedTree, long long>;
  auto f4 = catalog_entry("F4");
  auto t = parse_tree("((. - - .) 0 1 (. - - .))");
  std::cout << "Δ(1 ⊗ " << format_tree(t) << ") on F4 =\n"
            << format_tensor(coproduct_tree(f4, CoproductMode::recursive, Ext({1, t})));

  auto h2 = catalog_entry("H2");
  auto disc = coproduct_discrepancies(h2, 3);
  std::cout << "\nH2: cut formula and recursive coproduct differ in " << disc.size() << " terms up to 3 vertices\n";
  if (!disc.empty()) std::cout << "  e.g. " << format_discrepancy("H2", disc.front()) << "\n";

  LetterTable letters;
  auto w = parse_word("x 1 y 0 z", letters, 2);
  using WExt = ExtendedElement<TypedWord, long long>;
  WordCoproduct<long long> rec(h2, WordCoproductMode::recursive);
  std::cout << "\nΔ(0 ⊗ x 1 y 0 z) on H2 =\n" << format_tensor(rec(WExt({0, w})), letters);

  auto r = check_word_bialgebra(catalog_entry("F5"), 3);
  std::cout << "\nF5 word bialgebra check: " << (r.passed() ? "passes" : "fails " + r.violations.front().property)
            << "\n";
}
