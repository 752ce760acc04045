#include "eds/operad.hpp"
#include "reference_data.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace eds;

namespace {

const TypedTree L = TypedTree::leaf();
const TypedTree I = TypedTree::corolla();

TypedTree prec_t(Symbol a) { return right_comb(a); }
TypedTree succ_t(Symbol a) { return left_comb(a); }
TypedTree quatreun(Symbol x, Symbol y) { return TypedTree::graft(left_comb(y), x, std::nullopt, L); }
TypedTree quatredeux(Symbol x, Symbol y) { return TypedTree::graft(right_comb(y), x, std::nullopt, L); }
TypedTree quatretrois(Symbol x, Symbol y) { return TypedTree::graft(L, std::nullopt, x, left_comb(y)); }
TypedTree quatrequatre(Symbol x, Symbol y) { return TypedTree::graft(L, std::nullopt, x, right_comb(y)); }
TypedTree quatrecinq(Symbol x, Symbol y) { return TypedTree::graft(I, x, y, I); }

IntTreePoly two(const TypedTree& a, const TypedTree& b) {
  IntTreePoly p(a);
  p.add(b, 1);
  return p;
}

template <std::uint32_t P>
Arity2Element<Fp<P>> element(std::array<int, 4> c) {
  Arity2Element<Fp<P>> m;
  m.set(Side::prec, 0, Fp<P>(c[0])).set(Side::prec, 1, Fp<P>(c[1]));
  m.set(Side::succ, 0, Fp<P>(c[2])).set(Side::succ, 1, Fp<P>(c[3]));
  return m;
}

Arity2Element<Rational> gen(Side s, Symbol a) { return Arity2Element<Rational>().set(s, a, Rational(1)); }

}  // namespace

TEST(Compose, ArityTwoExamples) {
  for (auto& e : catalog2()) {
    for (Symbol a = 0; a < 2; ++a)
      for (Symbol b = 0; b < 2; ++b) {
        SCOPED_TRACE(e.label());
        EXPECT_EQ(compose(e, prec_t(a), {prec_t(b), I}),
                  two(quatrequatre(e.larrow(b, a), e.ltri(b, a)), quatretrois(e.rarrow(b, a), e.rtri(b, a))));
        EXPECT_EQ(compose(e, prec_t(a), {I, prec_t(b)}), IntTreePoly(quatrequatre(a, b)));
        EXPECT_EQ(compose(e, succ_t(a), {prec_t(b), I}), IntTreePoly(quatredeux(a, b)));
        EXPECT_EQ(compose(e, succ_t(a), {I, prec_t(b)}), IntTreePoly(quatrecinq(a, b)));
        EXPECT_EQ(compose(e, prec_t(a), {succ_t(b), I}), IntTreePoly(quatrecinq(b, a)));
        EXPECT_EQ(compose(e, prec_t(a), {I, succ_t(b)}), IntTreePoly(quatretrois(a, b)));
        EXPECT_EQ(compose(e, succ_t(a), {succ_t(b), I}), IntTreePoly(quatreun(a, b)));
        EXPECT_EQ(compose(e, succ_t(a), {I, succ_t(b)}),
                  two(quatredeux(e.larrow(a, b), e.ltri(a, b)), quatreun(e.rarrow(a, b), e.rtri(a, b))));
      }
  }
}

TEST(Compose, IdentityAndArityErrors) {
  auto e = catalog_entry("F5");
  for (auto& t : enumerate_basis(2, 3)) {
    EXPECT_EQ(compose(e, I, {t}), IntTreePoly(t));
    EXPECT_EQ(compose(e, t, {I, I, I}), IntTreePoly(t));
  }
  EXPECT_THROW(compose(e, prec_t(0), {I}), std::invalid_argument);
  EXPECT_THROW(compose(e, prec_t(0), {I, L}), std::invalid_argument);
}

TEST(Compose, IsAssociativeAsAnOperad) {
  // (t ∘_1 u) ∘ v against t ∘ (u ∘ v, I...) on small trees.
  auto e = catalog_entry("H2");
  for (auto& t : enumerate_basis(2, 2))
    for (auto& u : enumerate_basis(2, 2))
      for (auto& v : enumerate_basis(2, 2)) {
        auto inner = compose(e, u, {v, I});
        IntTreePoly lhs;
        for (auto& [w, c] : inner) lhs += c * compose(e, t, {w, I});
        IntTreePoly rhs;
        for (auto& [w, c] : compose(e, t, {u, I})) rhs += c * compose(e, w, {v, I, I});
        EXPECT_EQ(lhs, rhs);
      }
}

TEST(Dimensions, CatalanTimesPowers) {
  for (std::size_t omega = 1; omega <= 3; ++omega)
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_basis(omega, n).size(), operad_dimension_formula(omega, n));
  EXPECT_EQ(operad_dimension_formula(2, 4), 14u * 8u);
}

TEST(Associativity, KnownElements) {
  auto f4 = catalog_entry("F4");
  EXPECT_TRUE(check_associative(f4, gen(Side::prec, 0) + gen(Side::succ, 0)).holds);
  EXPECT_TRUE(check_associative(f4, gen(Side::prec, 0) + gen(Side::succ, 0), CheckMethod::composition).holds);
  auto bad = check_associative(f4, gen(Side::prec, 0) + gen(Side::succ, 1));
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.witness.has_value());
  auto bad2 = check_associative(f4, gen(Side::prec, 0) + gen(Side::succ, 1), CheckMethod::composition);
  EXPECT_FALSE(bad2.holds);
  ASSERT_TRUE(bad2.witness && bad2.witness->tree);
  EXPECT_THROW(check_associative(f4, gen(Side::prec, 3)), std::out_of_range);
}

TEST(Associativity, MethodsAgreeOnRandomElements) {
  std::mt19937_64 rng(7);
  for (auto& e : catalog2())
    for (int i = 0; i < 100; ++i) {
      auto m = element<5>({int(rng() % 5), int(rng() % 5), int(rng() % 5), int(rng() % 5)});
      ASSERT_EQ(check_associative(e, m).holds, check_associative(e, m, CheckMethod::composition).holds) << e.label();
    }
}

TEST(Associativity, SearchMatchesReferenceTable) {
  for (auto& e : catalog2()) {
    auto sols = solve_associative_fp<5>(e);
    std::set<refdata::Coeffs> got;
    for (auto& m : sols)
      got.insert({int(m.prec(0).value()), int(m.prec(1).value()), int(m.succ(0).value()), int(m.succ(1).value())});
    EXPECT_EQ(got.size(), sols.size());
    EXPECT_EQ(got, refdata::points_mod(refdata::associative_products().at(e.label()), 5)) << e.label();
  }
  EXPECT_EQ(solve_associative_fp<5>(catalog_entry("F3")).size(), 25u);
  EXPECT_EQ(solve_associative_fp<5>(catalog_entry("A1")).size(), 5u);
  EXPECT_THROW(solve_associative_fp<13>(matching_eds(4)), std::invalid_argument);
}

TEST(Dendriform, PairsOnH2) {
  auto h2 = catalog_entry("H2");
  const Arity2Element<Rational> zero;
  for (auto& m : {gen(Side::prec, 0) + gen(Side::succ, 0),
                  gen(Side::prec, 0) + gen(Side::prec, 1) + gen(Side::succ, 0) + gen(Side::succ, 1)}) {
    ASSERT_TRUE(check_associative(h2, m).holds);
    for (auto method : {CheckMethod::equations, CheckMethod::composition}) {
      EXPECT_TRUE(check_dendriform_pair(h2, m, zero, method).holds);
      EXPECT_TRUE(check_dendriform_pair(h2, zero, m, method).holds);
      Arity2Element<Rational> p, s;
      for (Symbol a = 0; a < 2; ++a) {
        p.set(Side::prec, a, m.prec(a));
        s.set(Side::succ, a, m.succ(a));
      }
      EXPECT_TRUE(check_dendriform_pair(h2, p, s, method).holds);
    }
  }
}

TEST(Dendriform, FailingPairOnF4) {
  auto f4 = catalog_entry("F4");
  for (auto method : {CheckMethod::equations, CheckMethod::composition}) {
    auto r = check_dendriform_pair(f4, gen(Side::prec, 0), gen(Side::succ, 1), method);
    EXPECT_FALSE(r.holds);
    EXPECT_TRUE(r.witness.has_value());
  }
}

TEST(Dendriform, MethodsAgreeOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (auto& e : catalog2())
    for (int i = 0; i < 100; ++i) {
      auto p = element<3>({int(rng() % 3), int(rng() % 3), int(rng() % 3), int(rng() % 3)});
      auto s = element<3>({int(rng() % 3), int(rng() % 3), int(rng() % 3), int(rng() % 3)});
      ASSERT_EQ(check_dendriform_pair(e, p, s).holds,
                check_dendriform_pair(e, p, s, CheckMethod::composition).holds)
          << e.label();
    }
}

TEST(Koszul, DimensionThree) {
  for (auto& e : catalog2()) {
    EXPECT_EQ(koszul_dual_dim3(e), 12 + 2 * refdata::coranks().at(e.label())) << e.label();
  }
  EXPECT_EQ(koszul_dual_dim3(catalog_entry("F3")), 12u);
  EXPECT_EQ(koszul_dual_dim3(catalog_entry("A1")), 18u);
  EXPECT_EQ(koszul_dual_dim3(matching_eds(1)), 3u);
  EXPECT_EQ(koszul_dual_dim3(matching_eds(3)), 27u);
}
