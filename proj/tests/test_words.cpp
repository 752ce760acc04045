#include "eds/dendriform.hpp"
#include "eds/word.hpp"

#include <gtest/gtest.h>

using namespace eds;

namespace {

std::vector<std::vector<TypedWord>> graded_words(std::size_t letters, std::size_t omega, std::size_t top) {
  std::vector<std::vector<TypedWord>> w(top + 1);
  for (std::size_t n = 1; n <= top; ++n) w[n] = enumerate_words(letters, omega, n);
  return w;
}

TypedWord w1(Letter v) { return TypedWord::letter(v); }

}  // namespace

TEST(TypedWord, Basics) {
  TypedWord w({0, 1, 2}, {1, 0});
  EXPECT_EQ(w.length(), 3u);
  EXPECT_EQ(w.tail(), TypedWord({1, 2}, {0}));
  EXPECT_EQ(prepend(1, 0, w.tail()), w);
  EXPECT_EQ(enumerate_words(2, 2, 3).size(), 2u * 2 * 2 * 2 * 2);
}

TEST(WordProduct, SmallValues) {
  auto f4 = catalog_entry("F4");
  // x ≺_a y = x a y for single letters
  EXPECT_EQ(word_product(f4, Side::prec, 1, w1(0), w1(1)), IntWordPoly(TypedWord({0, 1}, {1})));
  EXPECT_EQ(word_product(f4, Side::succ, 1, w1(0), w1(1)), IntWordPoly(TypedWord({1, 0}, {1})));
  EXPECT_THROW(word_product(f4, Side::prec, 2, w1(0), w1(1)), std::out_of_range);
}

TEST(WordProduct, TreePairingIsDendriformOnCatalog) {
  auto words = graded_words(2, 2, 3);
  for (auto& e : catalog2()) {
    auto prod = [&](Side s, Symbol a, const TypedWord& x, const TypedWord& y) { return word_product(e, s, a, x, y); };
    auto v = dendriform_violation_graded(e, prod, words, 5);
    EXPECT_FALSE(v.has_value()) << e.label() << " axiom " << (v ? v->axiom : 0);
  }
}

TEST(WordProduct, PrintedPairingFailsExactlyWhenArrowsDiffer) {
  auto words = graded_words(2, 2, 2);
  std::vector<std::string> failing, arrows_differ;
  for (auto& e : catalog2()) {
    auto prod = [&](Side s, Symbol a, const TypedWord& x, const TypedWord& y) {
      return word_product(e, s, a, x, y, WordPairing::swapped);
    };
    if (dendriform_violation_graded(e, prod, words, 4)) failing.push_back(e.label());
    if (!(e.table(Op::left) == e.table(Op::right))) arrows_differ.push_back(e.label());
  }
  EXPECT_EQ(failing, (std::vector<std::string>{"B1", "B2", "D1", "D2", "F1", "F2", "F3", "F4", "F5"}));
  EXPECT_EQ(failing, arrows_differ);
}

TEST(WordProduct, ShuffleFormulaOppositeAndCommutativity) {
  auto words = graded_words(2, 2, 3);
  for (auto& e : catalog2()) {
    const auto op = opposite(e);
    const bool comm = is_commutative(e);
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; i + j <= 4; ++j)
        for (auto& x : words[i])
          for (auto& y : words[j])
            for (Symbol a = 0; a < 2; ++a) {
              auto p = word_product(e, Side::prec, a, x, y);
              auto s = word_product(e, Side::succ, a, x, y);
              ASSERT_EQ(p, word_shuffle_product(e, Side::prec, a, x, y)) << e.label();
              ASSERT_EQ(s, word_shuffle_product(e, Side::succ, a, x, y)) << e.label();
              ASSERT_EQ(p, word_product(op, Side::succ, a, y, x)) << e.label();
              if (comm) {
                ASSERT_EQ(p, word_product(e, Side::succ, a, y, x)) << e.label();
              }
            }
  }
}

TEST(WordProduct, CorruptedTableIsCaught) {
  auto f4 = catalog_entry("F4");
  FiniteEds bad(f4.table(Op::left), f4.table(Op::right), OpTable(2, {0, 0, 0, 0}), f4.table(Op::tri_right));
  ASSERT_FALSE(is_eds(bad));
  auto words = graded_words(2, 2, 3);
  auto prod = [&](Side s, Symbol a, const TypedWord& x, const TypedWord& y) { return word_product(bad, s, a, x, y); };
  EXPECT_TRUE(dendriform_violation_graded(bad, prod, words, 5).has_value());
}
