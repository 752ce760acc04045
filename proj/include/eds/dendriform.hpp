#pragma once

#include "eds/eds.hpp"
#include "eds/lincomb.hpp"
#include "eds/tree.hpp"

#include <optional>

namespace eds {

template <class K>
struct DendriformViolation {
  int axiom = 0;  // 1: (x<y)<z, 2: x>(y<z), 3: x>(y>z)
  K x, y, z;
  Symbol a = 0, b = 0;
};

// Checks the three dendriform relations for one basis triple and all pairs of types.
// `prod(side, a, u, v)` returns the product of two basis elements.
template <class K, class Prod>
std::optional<DendriformViolation<K>> dendriform_violation(const FiniteEds& e, const Prod& prod, const K& x,
                                                           const K& y, const K& z) {
  using Poly = LinComb<K, long long>;
  auto mul = [&](Side s, Symbol a, const Poly& u, const Poly& v) {
    return bilinear<Poly>(u, v, [&](const K& p, const K& q) { return prod(s, a, p, q); });
  };
  const Poly X(x), Y(y), Z(z);
  const auto n = static_cast<Symbol>(e.size());
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b) {
      auto fail = [&](int id) { return DendriformViolation<K>{id, x, y, z, a, b}; };
      auto xy_prec = mul(Side::prec, a, X, Y);
      auto lhs1 = mul(Side::prec, b, xy_prec, Z);
      auto rhs1 = mul(Side::prec, e.larrow(a, b), X, mul(Side::prec, e.ltri(a, b), Y, Z)) +
                   mul(Side::prec, e.rarrow(a, b), X, mul(Side::succ, e.rtri(a, b), Y, Z));
      if (lhs1 != rhs1) return fail(1);
      auto lhs2 = mul(Side::succ, a, X, mul(Side::prec, b, Y, Z));
      auto rhs2 = mul(Side::prec, b, mul(Side::succ, a, X, Y), Z);
      if (lhs2 != rhs2) return fail(2);
      auto lhs3 = mul(Side::succ, a, X, mul(Side::succ, b, Y, Z));
      auto rhs3 = mul(Side::succ, e.rarrow(a, b), mul(Side::succ, e.rtri(a, b), X, Y), Z) +
                   mul(Side::succ, e.larrow(a, b), mul(Side::prec, e.ltri(a, b), X, Y), Z);
      if (lhs3 != rhs3) return fail(3);
    }
  return std::nullopt;
}

// Runs the check over all triples drawn from graded pieces with total degree <= bound.
// `basis[d]` lists the basis elements of degree d (index 0 unused).
template <class K, class Prod>
std::optional<DendriformViolation<K>> dendriform_violation_graded(const FiniteEds& e, const Prod& prod,
                                                                  const std::vector<std::vector<K>>& basis,
                                                                  std::size_t bound) {
  auto have = [&](std::size_t d) { return d < basis.size(); };
  for (std::size_t i = 1; i + 2 <= bound && have(i); ++i)
    for (std::size_t j = 1; i + j + 1 <= bound && have(j); ++j)
      for (std::size_t k = 1; i + j + k <= bound && have(k); ++k) {
        for (auto& x : basis[i])
          for (auto& y : basis[j])
            for (auto& z : basis[k])
              if (auto v = dendriform_violation(e, prod, x, y, z)) return v;
      }
  return std::nullopt;
}

}  // namespace eds
