// Small products of typed trees and words in the matching case.
#include "eds/io.hpp"

#include <iostream>

using namespace eds;

int main() {
  auto e = matching_eds(2, "EDS({a,b})");
  const auto v = TypedTree::corolla();
  const Symbol a = 0, b = 1;

  std::cout << "∨ ≻_a ∨ =\n" << format_tree_poly(typed_product(e, Side::succ, a, v, v));
  std::cout << "∨ ≺_a ∨ =\n" << format_tree_poly(typed_product(e, Side::prec, a, v, v));
  std::cout << "∨ ≻_a (∨ ≻_b ∨) =\n" << format_tree_poly(typed_product(e, Side::succ, a, v, left_comb(b)));
  std::cout << "(∨ ≺_a ∨) ≺_b ∨ =\n" << format_tree_poly(typed_product(e, Side::prec, b, right_comb(a), v));

  // The same products computed through shuffles.
  std::cout << "shuffle form agrees: "
            << (shuffle_product_trees(e, Side::prec, b, right_comb(a), v) ==
                typed_product(e, Side::prec, b, right_comb(a), v))
            << "\n\n";

  LetterTable letters;
  auto x = parse_word("x 1 y", letters, e.size());
  auto z = parse_word("z", letters, e.size());
  std::cout << "(x 1 y) ≺_0 z =\n" << format_word_poly(word_product(e, Side::prec, 0, x, z), letters);
  std::cout << "(x 1 y) ≻_0 z =\n" << format_word_poly(word_product(e, Side::succ, 0, x, z), letters);
}
