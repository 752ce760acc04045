#pragma once

#include "eds/eds.hpp"
#include "eds/lincomb.hpp"
#include "eds/shuffle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eds {

using OptSymbol = std::optional<Symbol>;

enum class Side { prec, succ };

// Plane binary tree with typed internal edges, stored as a preorder byte code:
// leaf = 0; node = 1, left, left type, right type, right; a type byte is 2 for
// the empty type and 3 + alpha otherwise. Byte order on codes is the structural
// order (leaf < node, then left, left type, right type, right).
class TypedTree {
 public:
  TypedTree() : code_(1, '\0') {}

  static TypedTree leaf() { return {}; }

  static TypedTree graft(const TypedTree& t1, OptSymbol a, OptSymbol b, const TypedTree& t2) {
    if (a.has_value() == t1.is_leaf()) throw std::invalid_argument("graft: left type must be present iff left child is a node");
    if (b.has_value() == t2.is_leaf()) throw std::invalid_argument("graft: right type must be present iff right child is a node");
    return graft_unchecked(t1, a, b, t2);
  }

  // ∨ = graft(|, -, -, |)
  static TypedTree corolla() { return graft_unchecked(leaf(), std::nullopt, std::nullopt, leaf()); }

  bool is_leaf() const { return code_[0] == '\0'; }

  TypedTree left() const { return TypedTree(code_.substr(1, split() - 1)); }
  TypedTree right() const { return TypedTree(code_.substr(split() + 2)); }
  OptSymbol left_type() const { return decode(code_[split()]); }
  OptSymbol right_type() const { return decode(code_[split() + 1]); }

  std::size_t vertices() const {
    std::size_t v = 0;
    for (char c : code_) v += c == '\1';
    return v;
  }

  TypedTree mirror() const {
    if (is_leaf()) return *this;
    return graft_unchecked(right().mirror(), right_type(), left_type(), left().mirror());
  }

  const std::string& code() const { return code_; }

  friend bool operator==(const TypedTree&, const TypedTree&) = default;
  friend auto operator<=>(const TypedTree& a, const TypedTree& b) {
    return static_cast<const std::string&>(a.code_) <=> b.code_;
  }

  static TypedTree graft_unchecked(const TypedTree& t1, OptSymbol a, OptSymbol b, const TypedTree& t2) {
    std::string c;
    c.reserve(t1.code_.size() + t2.code_.size() + 3);
    c += '\1';
    c += t1.code_;
    c += encode(a);
    c += encode(b);
    c += t2.code_;
    return TypedTree(std::move(c));
  }

 private:
  explicit TypedTree(std::string code) : code_(std::move(code)) {}

  static char encode(OptSymbol s) { return s ? static_cast<char>(3 + *s) : '\2'; }
  static OptSymbol decode(char c) {
    auto u = static_cast<unsigned char>(c);
    return u == 2 ? OptSymbol{} : OptSymbol(static_cast<Symbol>(u - 3));
  }
  // Position just past the left subtree of a node.
  std::size_t split() const {
    if (is_leaf()) throw std::logic_error("leaf has no children");
    return skip(1);
  }
  std::size_t skip(std::size_t pos) const {
    if (code_[pos] == '\0') return pos + 1;
    return skip(skip(pos + 1) + 2);
  }

  std::string code_;
};

}  // namespace eds

template <>
struct std::hash<eds::TypedTree> {
  std::size_t operator()(const eds::TypedTree& t) const noexcept { return std::hash<std::string>{}(t.code()); }
};

namespace eds {

template <class S = Rational>
using TreePoly = LinComb<TypedTree, S>;

using IntTreePoly = LinComb<TypedTree, long long>;

inline TypedTree left_comb(Symbol a) { return TypedTree::graft(TypedTree::corolla(), a, std::nullopt, TypedTree::leaf()); }
inline TypedTree right_comb(Symbol b) { return TypedTree::graft(TypedTree::leaf(), std::nullopt, b, TypedTree::corolla()); }

namespace detail {

inline IntTreePoly graft_left_fixed(const TypedTree& t1, OptSymbol a, Symbol b, const IntTreePoly& rhs) {
  IntTreePoly out;
  for (auto& [t, c] : rhs) out.add(TypedTree::graft_unchecked(t1, a, b, t), c);
  return out;
}
inline IntTreePoly graft_right_fixed(const IntTreePoly& lhs, Symbol a, OptSymbol b, const TypedTree& t2) {
  IntTreePoly out;
  for (auto& [t, c] : lhs) out.add(TypedTree::graft_unchecked(t, a, b, t2), c);
  return out;
}

// Products of two nonempty trees; the leaf cases of the recursion are the unit rules.
inline IntTreePoly tree_product(const FiniteEds& e, Side side, Symbol a, const TypedTree& x, const TypedTree& y) {
  if (side == Side::prec) {
    auto t2 = x.right();
    if (t2.is_leaf()) return IntTreePoly(TypedTree::graft_unchecked(x.left(), x.left_type(), a, y));
    Symbol b = *x.right_type();
    auto t1 = x.left();
    auto lt = x.left_type();
    auto out = graft_left_fixed(t1, lt, e.larrow(b, a), tree_product(e, Side::prec, e.ltri(b, a), t2, y));
    out += graft_left_fixed(t1, lt, e.rarrow(b, a), tree_product(e, Side::succ, e.rtri(b, a), t2, y));
    return out;
  }
  auto u1 = y.left();
  if (u1.is_leaf()) return IntTreePoly(TypedTree::graft_unchecked(x, a, y.right_type(), y.right()));
  Symbol b = *y.left_type();
  auto u2 = y.right();
  auto rt = y.right_type();
  auto out = graft_right_fixed(tree_product(e, Side::succ, e.rtri(a, b), x, u1), e.rarrow(a, b), rt, u2);
  out += graft_right_fixed(tree_product(e, Side::prec, e.ltri(a, b), x, u1), e.larrow(a, b), rt, u2);
  return out;
}

inline void check_symbol(const FiniteEds& e, Symbol a) {
  if (a >= e.size()) throw std::out_of_range("type symbol " + std::to_string(a) + " out of range");
}

}  // namespace detail

// x ≺_a y or x ≻_a y on basis trees (both nonempty).
inline IntTreePoly typed_product(const FiniteEds& e, Side side, Symbol a, const TypedTree& x, const TypedTree& y) {
  detail::check_symbol(e, a);
  if (x.is_leaf() || y.is_leaf()) throw std::invalid_argument("typed_product: arguments must be nonempty trees");
  return detail::tree_product(e, side, a, x, y);
}

template <class S>
TreePoly<S> typed_product(const FiniteEds& e, Side side, Symbol a, const TreePoly<S>& x, const TreePoly<S>& y) {
  detail::check_symbol(e, a);
  return bilinear<TreePoly<S>>(x, y, [&](const TypedTree& s, const TypedTree& t) {
    return typed_product(e, side, a, s, t);
  });
}

// Products extended to the unit |: x ≺ | = x, | ≻ x = x, | ≺ x = x ≻ | = 0.
// The symbol is ignored when the unit is involved.
inline IntTreePoly typed_product_unital(const FiniteEds& e, Side side, OptSymbol a, const TypedTree& x,
                                        const TypedTree& y) {
  if (x.is_leaf() && y.is_leaf()) throw std::invalid_argument("product of two units is undefined");
  if (y.is_leaf()) return side == Side::prec ? IntTreePoly(x) : IntTreePoly();
  if (x.is_leaf()) return side == Side::succ ? IntTreePoly(y) : IntTreePoly();
  if (!a) throw std::invalid_argument("missing type for a product of nonempty trees");
  return typed_product(e, side, *a, x, y);
}

// Comb decompositions.
struct CombDecomposition {
  enum class Kind { right, left };
  Kind side = Kind::right;
  std::vector<Symbol> spine_types;                         // alpha_2 .. alpha_k
  std::vector<std::pair<OptSymbol, TypedTree>> branches;  // (beta_i, T_i), i = 1..k
};

inline CombDecomposition right_comb_decomposition(const TypedTree& t) {
  CombDecomposition d;
  d.side = CombDecomposition::Kind::right;
  for (TypedTree cur = t; !cur.is_leaf();) {
    d.branches.emplace_back(cur.left_type(), cur.left());
    if (auto rt = cur.right_type()) d.spine_types.push_back(*rt);
    cur = cur.right();
  }
  return d;
}

inline CombDecomposition left_comb_decomposition(const TypedTree& t) {
  CombDecomposition d;
  d.side = CombDecomposition::Kind::left;
  for (TypedTree cur = t; !cur.is_leaf();) {
    d.branches.emplace_back(cur.right_type(), cur.right());
    if (auto lt = cur.left_type()) d.spine_types.push_back(*lt);
    cur = cur.left();
  }
  return d;
}

inline TypedTree reassemble(const CombDecomposition& d) {
  if (d.spine_types.size() + 1 != d.branches.size() && !d.branches.empty())
    throw std::invalid_argument("comb: spine and branch counts disagree");
  TypedTree acc = TypedTree::leaf();
  for (std::size_t i = d.branches.size(); i-- > 0;) {
    OptSymbol spine = i + 1 < d.branches.size() ? OptSymbol(d.spine_types[i]) : std::nullopt;
    auto& [beta, ti] = d.branches[i];
    acc = d.side == CombDecomposition::Kind::right ? TypedTree::graft(ti, beta, spine, acc)
                                                   : TypedTree::graft(acc, spine, beta, ti);
  }
  return acc;
}

// Product of a right comb by a left comb as a sum of ladders indexed by shuffles.
inline IntTreePoly shuffle_product_trees(const FiniteEds& e, Side side, Symbol a, const TypedTree& t,
                                         const TypedTree& u) {
  detail::check_symbol(e, a);
  if (t.is_leaf() || u.is_leaf()) throw std::invalid_argument("shuffle_product_trees: arguments must be nonempty");
  auto dt = right_comb_decomposition(t);
  auto du = left_comb_decomposition(u);
  const std::size_t k = dt.branches.size(), l = du.branches.size();
  std::vector<Symbol> types = dt.spine_types;
  types.push_back(a);
  types.insert(types.end(), du.spine_types.begin(), du.spine_types.end());
  auto branch = [&](std::size_t j) -> const std::pair<OptSymbol, TypedTree>& {
    return j <= k ? dt.branches[j - 1] : du.branches[j - k - 1];
  };

  IntTreePoly out;
  for (auto& sigma : shuffles(k, l)) {
    if (is_prec_shuffle(sigma, k) != (side == Side::prec)) continue;
    auto d = d_map(e, k, l, sigma, types);
    auto inv = inverse_permutation(sigma);
    TypedTree acc = TypedTree::leaf();
    for (std::size_t i = k + l; i >= 1; --i) {
      std::size_t j = inv[i - 1];
      OptSymbol spine = i < k + l ? OptSymbol(d[i - 1]) : std::nullopt;
      auto& [beta, tj] = branch(j);
      acc = j <= k ? TypedTree::graft(tj, beta, spine, acc) : TypedTree::graft(acc, spine, beta, tj);
    }
    out.add(acc, 1);
  }
  return out;
}

// All typed trees with n internal vertices over omega symbols, in structural order.
inline std::vector<TypedTree> enumerate_basis(std::size_t omega, std::size_t n) {
  if (n == 0) return {TypedTree::leaf()};
  std::vector<TypedTree> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto ls = enumerate_basis(omega, i), rs = enumerate_basis(omega, n - 1 - i);
    for (auto& l : ls)
      for (auto& r : rs) {
        std::vector<OptSymbol> lt, rt;
        if (l.is_leaf()) lt = {std::nullopt};
        else for (std::size_t s = 0; s < omega; ++s) lt.emplace_back(static_cast<Symbol>(s));
        if (r.is_leaf()) rt = {std::nullopt};
        else for (std::size_t s = 0; s < omega; ++s) rt.emplace_back(static_cast<Symbol>(s));
        for (auto a : lt)
          for (auto b : rt) out.push_back(TypedTree::graft(l, a, b, r));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eds
