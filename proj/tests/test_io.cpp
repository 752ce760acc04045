#include "eds/io.hpp"

#include <gtest/gtest.h>

using namespace eds;

namespace {

ParseError parse_error_of(const std::string& text) {
  try {
    parse_eds(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(0, 0, "");
}

const char* kF3 =
    "# the matching EDS on two symbols\n"
    "eds 2 F3\n"
    "left\n0 0\n1 1\n"
    "right\n0 1\n0 1\n"
    "tri_left\n0 1\n0 1   # right projection\n"
    "tri_right\n0 0\n1 1\n";

}  // namespace

TEST(EdsFormat, RoundTripsTheCatalog) {
  for (auto& e : catalog2()) {
    auto back = parse_eds(format_eds(e));
    EXPECT_TRUE(back.same_tables(e)) << e.label();
    EXPECT_EQ(back.label(), e.label());
  }
}

TEST(EdsFormat, CommentsAndLabel) {
  auto e = parse_eds(std::string(kF3));
  EXPECT_EQ(e.label(), "F3");
  EXPECT_TRUE(e.same_tables(catalog_entry("F3")));
}

TEST(EdsFormat, Diagnostics) {
  auto e1 = parse_error_of("");
  EXPECT_EQ(e1.line(), 1u);
  auto e2 = parse_error_of("eds x\n");
  EXPECT_EQ(e2.line(), 1u);
  EXPECT_EQ(e2.col(), 5u);
  auto e3 = parse_error_of("eds 2\nleft\n0 0\n1 2\n");
  EXPECT_EQ(e3.line(), 4u);
  EXPECT_EQ(e3.col(), 3u);
  auto e4 = parse_error_of("eds 2\nleft\n0 0\n1 1\nright\n0 1\n");
  EXPECT_EQ(e4.line(), 7u);  // the first missing row
  auto e5 = parse_error_of("eds 2\nright\n");
  EXPECT_EQ(e5.line(), 2u);
  auto e6 = parse_error_of("eds 1\nleft\n0\nright\n0\ntri_left\n0\ntri_right\n0\nextra\n");
  EXPECT_EQ(e6.line(), 10u);
  auto e7 = parse_error_of("eds 2\nleft\n0 0 0\n");
  EXPECT_EQ(e7.col(), 5u);
  EXPECT_NE(std::string(e7.what()).find("line 3"), std::string::npos);
}

TEST(TreeLiteral, RoundTrip) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& t : enumerate_basis(2, n)) EXPECT_EQ(parse_tree(format_tree(t)), t);
  EXPECT_EQ(parse_tree("."), TypedTree::leaf());
  EXPECT_EQ(parse_tree(" ( . - - . ) "), TypedTree::corolla());
  EXPECT_EQ(format_tree(right_comb(1)), "(. - 1 (. - - .))");
}

TEST(TreeLiteral, Diagnostics) {
  auto col_of = [](const std::string& s) -> std::size_t {
    try {
      parse_tree(s);
    } catch (const ParseError& e) {
      return e.col();
    }
    return 0;
  };
  EXPECT_EQ(col_of("(. - 1 .)"), 6u);
  EXPECT_EQ(col_of("(. - - .) x"), 11u);
  EXPECT_EQ(col_of("(. - -"), 7u);
  EXPECT_EQ(col_of("(. q - .)"), 4u);
  EXPECT_THROW(parse_tree("(. - 2 (. - - .))", catalog_entry("F3")), ParseError);
  EXPECT_NO_THROW(parse_tree("(. - 1 (. - - .))", catalog_entry("F3")));
}

TEST(WordLiteral, RoundTripAndDiagnostics) {
  LetterTable letters;
  auto w = parse_word("x 1 y 0 x", letters, 2);
  EXPECT_EQ(w, TypedWord({0, 1, 0}, {1, 0}));
  EXPECT_EQ(letters.size(), 2u);
  EXPECT_EQ(format_word(w, letters), "x 1 y 0 x");
  EXPECT_THROW(parse_word("", letters), ParseError);
  EXPECT_THROW(parse_word("x 1", letters), ParseError);
  EXPECT_THROW(parse_word("x 2 y", letters, 2), ParseError);
  EXPECT_THROW(parse_word("1 0 y", letters), ParseError);
}

TEST(Arity2Literal, ParseFormatAndReduce) {
  auto m = parse_arity2("prec:0=1, succ:1=-1/2", 2);
  EXPECT_EQ(m.prec(0), Rational(1));
  EXPECT_EQ(m.succ(1), Rational(-1, 2));
  EXPECT_EQ(format_arity2(m), "prec:0=1,succ:1=-1/2");
  EXPECT_TRUE(parse_arity2(" 0 ").is_zero());
  auto r = reduce_mod<5>(m);
  EXPECT_EQ(r.succ(1).value(), 2u);  // -1/2 = 2 mod 5
  EXPECT_THROW(reduce_mod<2>(m), std::domain_error);
  EXPECT_THROW(parse_arity2("prec:0", 2), ParseError);
  EXPECT_THROW(parse_arity2("left:0=1", 2), ParseError);
  EXPECT_THROW(parse_arity2("prec:2=1", 2), ParseError);
  EXPECT_THROW(parse_arity2("prec:0=x", 2), std::invalid_argument);
}

TEST(Formatting, LinearCombinations) {
  IntTreePoly p(TypedTree::corolla());
  p.add(right_comb(0), 2);
  EXPECT_EQ(format_tree_poly(p), "1 · (. - - .)\n2 · (. - 0 (. - - .))\n");
  EXPECT_EQ(format_tree_poly(IntTreePoly()), "0\n");
  TensorPoly<TypedTree, long long> t;
  t.add({{1, TypedTree::corolla()}, {0, TypedTree::corolla()}}, 1);
  EXPECT_EQ(format_tensor(t), "1 · (1 ⊗ (. - - .)) ⊗ (0 ⊗ (. - - .))\n");
}
