#include "eds/bialgebra.hpp"

#include <gtest/gtest.h>

using namespace eds;

namespace {

using TExt = ExtendedElement<TypedTree, long long>;
using TTen = TensorPoly<TypedTree, long long>;
using WExt = ExtendedElement<TypedWord, long long>;
using WTen = TensorPoly<TypedWord, long long>;

const TypedTree V = TypedTree::corolla();

Decorated<TypedTree> dt(Symbol a, const TypedTree& t) { return {a, t}; }
Decorated<TypedWord> dw(Symbol a, const TypedWord& w) { return {a, w}; }

}  // namespace

TEST(TreeCoproduct, GeneratorsArePrimitive) {
  for (auto lbl : {"F3", "F4", "F5", "H2"}) {
    auto e = catalog_entry(lbl);
    for (Symbol a = 0; a < 2; ++a)
      for (auto mode : {CoproductMode::recursive, CoproductMode::cuts})
        EXPECT_TRUE(coproduct_tree(e, mode, TExt(dt(a, V))).empty()) << lbl;
  }
}

TEST(TreeCoproduct, SmallValues) {
  auto f4 = catalog_entry("F4");
  TTen expected;
  expected.add({dt(1, V), dt(0, V)}, 1);
  EXPECT_EQ(coproduct_tree(f4, CoproductMode::recursive, TExt(dt(1, right_comb(1)))), expected);

  auto f3 = catalog_entry("F3");
  for (Symbol a = 0; a < 2; ++a)
    for (Symbol b = 0; b < 2; ++b) {
      TTen ex;
      ex.add({dt(a, V), dt(b, V)}, 1);
      EXPECT_EQ(coproduct_tree(f3, CoproductMode::recursive, TExt(dt(a, right_comb(b)))), ex);
      EXPECT_EQ(coproduct_tree(f3, CoproductMode::cuts, TExt(dt(a, right_comb(b)))), ex);
    }
}

TEST(TreeCoproduct, FactorizationReassembles) {
  for (auto lbl : {"F3", "F4", "F5", "H2"}) {
    auto e = catalog_entry(lbl);
    TreeCoproduct<long long> delta(e, CoproductMode::recursive);
    for (std::size_t d = 1; d <= 4; ++d)
      for (auto& t : enumerate_basis(2, d))
        for (Symbol a = 0; a < 2; ++a) EXPECT_EQ(delta.multiply(delta.factorize(a, t)), TExt(dt(a, t))) << lbl;
  }
}

TEST(TreeCoproduct, DegenerateIsRejected) {
  EXPECT_THROW(coproduct_tree(catalog_entry("A1"), CoproductMode::recursive, TExt(dt(0, V))), std::domain_error);
  auto f3 = catalog_entry("F3");
  EXPECT_THROW(coproduct_tree(f3, CoproductMode::recursive, TExt(dt(2, V))), std::out_of_range);
}

TEST(TreeCoproduct, BialgebraOnNondegenerateEntries) {
  for (auto lbl : {"F3", "F4", "F5", "H2"}) {
    auto r = check_tree_bialgebra(catalog_entry(lbl), 4);
    EXPECT_TRUE(r.passed()) << lbl << " " << (r.passed() ? "" : r.violations.front().property);
    EXPECT_GT(r.pairs, 0u);
  }
}

TEST(TreeCoproduct, CutsAgreeExceptOnH2) {
  for (auto lbl : {"F3", "F4", "F5"}) EXPECT_TRUE(coproduct_discrepancies(catalog_entry(lbl), 4).empty()) << lbl;
  auto h2 = catalog_entry("H2");
  auto disc = coproduct_discrepancies(h2, 4);
  EXPECT_EQ(disc.size(), 1192u);
  for (auto& d : disc) EXPECT_NE(d.recursive_coef, d.cuts_coef);
  EXPECT_FALSE(check_tree_bialgebra(h2, 4, CoproductMode::cuts).passed());
}

TEST(WordCoproduct, TwoLetterFormula) {
  // Δ(α ⊗ v1 β v2) = (α↶β ⊗ v1) ⊗ (α◀β ⊗ v2)
  for (auto lbl : {"F3", "F4", "H2"}) {
    auto e = catalog_entry(lbl);
    const auto nd = nondegeneracy(e);
    auto& [cl, bl] = *nd.inv_left;
    WordCoproduct<long long> rec(e, WordCoproductMode::recursive);
    WordCoproduct<long long> dec(e, WordCoproductMode::deconcatenation);
    for (Symbol a = 0; a < 2; ++a)
      for (Symbol b = 0; b < 2; ++b) {
        TypedWord w({0, 1}, {b});
        WTen ex;
        ex.add({dw(cl(a, b), TypedWord::letter(0)), dw(bl(a, b), TypedWord::letter(1))}, 1);
        EXPECT_EQ(rec(WExt(dw(a, w))), ex) << lbl;
        WTen closed;
        closed.add({dw(a, TypedWord::letter(0)), dw(bl(a, b), TypedWord::letter(1))}, 1);
        EXPECT_EQ(dec(WExt(dw(a, w))), closed) << lbl;
      }
  }
}

TEST(WordCoproduct, LettersArePrimitive) {
  auto e = catalog_entry("F4");
  EXPECT_TRUE(coproduct_word(e, WExt(dw(0, TypedWord::letter(3)))).empty());
}

TEST(WordCoproduct, Preconditions) {
  EXPECT_THROW(coproduct_word(catalog_entry("F5"), WExt(dw(0, TypedWord::letter(0)))), std::domain_error);
  EXPECT_THROW(coproduct_word(catalog_entry("A1"), WExt(dw(0, TypedWord::letter(0)))), std::domain_error);
  EXPECT_NO_THROW(WordCoproduct<long long>(catalog_entry("F5"), WordCoproductMode::recursive));
}

TEST(WordCoproduct, BialgebraOnCommutativeEntries) {
  for (auto lbl : {"F3", "F4", "H2"}) EXPECT_TRUE(check_word_bialgebra(catalog_entry(lbl), 4).passed()) << lbl;
  for (auto lbl : {"F3", "F4"})
    EXPECT_TRUE(check_word_bialgebra(catalog_entry(lbl), 4, WordCoproductMode::deconcatenation).passed()) << lbl;
  auto h2 = check_word_bialgebra(catalog_entry("H2"), 4, WordCoproductMode::deconcatenation);
  ASSERT_FALSE(h2.passed());
  EXPECT_EQ(h2.violations.front().property, "prec-compatibility");
}

TEST(WordCoproduct, F5HasViolationWitness) {
  for (auto mode : {WordCoproductMode::recursive, WordCoproductMode::deconcatenation}) {
    auto r = check_word_bialgebra(catalog_entry("F5"), 4, mode);
    ASSERT_FALSE(r.passed());
    EXPECT_TRUE(r.violations.front().y.has_value());
  }
}

TEST(Obstruction, A1HasCollidingPrecProducts) {
  auto c = find_product_collision(catalog_entry("A1"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->side, Side::prec);
  EXPECT_NE(c->first, c->second);
  EXPECT_EQ(c->first, (std::pair<Symbol, Symbol>{0, 0}));
  EXPECT_EQ(c->second, (std::pair<Symbol, Symbol>{0, 1}));
  for (auto lbl : {"F3", "F4", "F5", "H2"}) EXPECT_FALSE(find_product_collision(catalog_entry(lbl))) << lbl;
}

TEST(Obstruction, GeneratedSpanIsFreeOnlyWhenNondegenerate) {
  for (auto& e : catalog2()) {
    auto dims = generated_span_dimensions(e, 3);
    if (nondegeneracy(e).nondegenerate()) EXPECT_EQ(dims, (std::vector<std::size_t>{2, 8, 40})) << e.label();
    else EXPECT_TRUE(find_product_collision(e).has_value()) << e.label();
  }
  EXPECT_EQ(generated_span_dimensions(catalog_entry("A1"), 3), (std::vector<std::size_t>{2, 2, 5}));
}
