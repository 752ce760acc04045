#pragma once

#include "eds/eds.hpp"
#include "eds/linalg.hpp"
#include "eds/lincomb.hpp"
#include "eds/tree.hpp"
#include "eds/word.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace eds {

// α ⊗ x in 𝕂Ω ⊗ A.
template <class K>
using Decorated = std::pair<Symbol, K>;

template <class K, class S = Rational>
using ExtendedElement = LinComb<Decorated<K>, S>;

template <class K, class S = Rational>
using TensorPoly = LinComb<std::pair<Decorated<K>, Decorated<K>>, S>;

template <class K, class S = Rational>
using Tensor3Poly = LinComb<std::tuple<Decorated<K>, Decorated<K>, Decorated<K>>, S>;

template <class K>
struct Algebra;

template <>
struct Algebra<TypedTree> {
  static constexpr const char* name = "trees";
  static IntTreePoly product(const FiniteEds& e, Side s, Symbol a, const TypedTree& x, const TypedTree& y) {
    return typed_product(e, s, a, x, y);
  }
  static std::size_t degree(const TypedTree& t) { return t.vertices(); }
};

template <>
struct Algebra<TypedWord> {
  static constexpr const char* name = "words";
  static IntWordPoly product(const FiniteEds& e, Side s, Symbol a, const TypedWord& x, const TypedWord& y) {
    return word_product(e, s, a, x, y);
  }
  static std::size_t degree(const TypedWord& w) { return w.length(); }
};

// (α⊗x) ≺ (β⊗y) = (α←β) ⊗ (x ≺_{α◁β} y), and (α⊗x) ≻ (β⊗y) = (α→β) ⊗ (x ≻_{α▷β} y).
template <class K, class S>
ExtendedElement<K, S> scalar_extension_product(const FiniteEds& e, Side side, const ExtendedElement<K, S>& x,
                                               const ExtendedElement<K, S>& y) {
  ExtendedElement<K, S> out;
  for (auto& [dx, cx] : x)
    for (auto& [dy, cy] : y) {
      const Symbol a = dx.first, b = dy.first;
      const Symbol head = side == Side::prec ? e.larrow(a, b) : e.rarrow(a, b);
      const Symbol sub = side == Side::prec ? e.ltri(a, b) : e.rtri(a, b);
      const S c = cx * cy;
      for (auto& [k, ck] : Algebra<K>::product(e, side, sub, dx.second, dy.second)) out.add({head, k}, c * S(ck));
    }
  return out;
}

template <class K, class S>
TensorPoly<K, S> tensor(const ExtendedElement<K, S>& x, const ExtendedElement<K, S>& y) {
  TensorPoly<K, S> out;
  for (auto& [p, a] : x)
    for (auto& [q, b] : y) out.add({p, q}, a * b);
  return out;
}

namespace detail {

template <class K, class S>
struct Dendri {
  using Ext = ExtendedElement<K, S>;
  using Ten = TensorPoly<K, S>;
  const FiniteEds& e;

  Ext mul(Side s, const Ext& x, const Ext& y) const { return scalar_extension_product(e, s, x, y); }
  Ext dot(const Ext& x, const Ext& y) const { return mul(Side::prec, x, y) + mul(Side::succ, x, y); }

  // Right-hand sides of the two compatibility formulas.
  Ten delta_product(Side side, const Ext& x, const Ten& dx, const Ext& y, const Ten& dy) const {
    Ten out = side == Side::prec ? tensor(x, y) : tensor(y, x);
    for (auto& [t, c] : dx) {
      Ext x1(t.first), x2(t.second);
      out += c * tensor(mul(side, x1, y), x2);
      if (side == Side::prec) out += c * tensor(x1, dot(x2, y));
    }
    for (auto& [t, c] : dy) {
      Ext y1(t.first), y2(t.second);
      if (side == Side::succ) out += c * tensor(y1, dot(x, y2));
      out += c * tensor(mul(side, x, y1), y2);
    }
    for (auto& [t, c] : dx)
      for (auto& [u, d] : dy) out += (c * d) * tensor(mul(side, Ext(t.first), Ext(u.first)), dot(Ext(t.second), Ext(u.second)));
    return out;
  }
};

inline const NondegeneracyReport& require_nondegenerate(const NondegeneracyReport& r, const char* what) {
  if (!r.nondegenerate()) throw std::domain_error(std::string(what) + " needs a nondegenerate EDS");
  return r;
}

}  // namespace detail

enum class CoproductMode { recursive, cuts };
enum class WordCoproductMode { recursive, deconcatenation };

// Coproduct on 𝕂Ω ⊗ 𝕂T⁺ with primitive generators α⊗∨, memoized per basis element.
template <class S = Rational>
class TreeCoproduct {
 public:
  using Ext = ExtendedElement<TypedTree, S>;
  using Ten = TensorPoly<TypedTree, S>;

  TreeCoproduct(const FiniteEds& e, CoproductMode mode)
      : e_(e), mode_(mode), nd_(nondegeneracy(e)), ops_{e_} {
    detail::require_nondegenerate(nd_, "the tree coproduct");
  }

  const Ten& basis(Symbol a, const TypedTree& t) {
    detail::check_symbol(e_, a);
    if (t.is_leaf()) throw std::invalid_argument("coproduct of the empty tree");
    Decorated<TypedTree> key{a, t};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Ten v = mode_ == CoproductMode::recursive ? recursive(a, t) : cuts(a, t);
    return memo_.emplace(std::move(key), std::move(v)).first->second;
  }

  Ten operator()(const Ext& x) {
    Ten out;
    for (auto& [d, c] : x) out += c * basis(d.first, d.second);
    return out;
  }

  // α⊗T as a product of lower-degree elements: X ≻ (Y ≺ Z), with missing factors dropped.
  struct Factorization {
    std::optional<Decorated<TypedTree>> left;
    Decorated<TypedTree> middle;
    std::optional<Decorated<TypedTree>> right;
  };

  Factorization factorize(Symbol a, const TypedTree& t) const {
    const auto& [cl, bl] = *nd_.inv_left;   // ↶, ◀
    const auto& [cr, br] = *nd_.inv_right;  // ↷, ▶
    Factorization f;
    const auto lt = t.left_type(), rt = t.right_type();
    Symbol mid = a;
    if (lt) {
      f.left = Decorated<TypedTree>{br(*lt, a), t.left()};
      mid = cr(*lt, a);
    }
    if (rt) {
      f.right = Decorated<TypedTree>{bl(a, *rt), t.right()};
      mid = cl(mid, *rt);
    }
    f.middle = {mid, TypedTree::corolla()};
    return f;
  }

  Ext multiply(const Factorization& f) const {
    Ext w(f.middle);
    if (f.right) w = ops_.mul(Side::prec, w, Ext(*f.right));
    if (f.left) w = ops_.mul(Side::succ, Ext(*f.left), w);
    return w;
  }

 private:
  Ten recursive(Symbol a, const TypedTree& t) {
    auto f = factorize(a, t);
    Ext w(f.middle);
    Ten dw;
    if (f.right) {
      Ext z(*f.right);
      Ten dz = basis(f.right->first, f.right->second);
      dw = ops_.delta_product(Side::prec, w, dw, z, dz);
      w = ops_.mul(Side::prec, w, z);
    }
    if (f.left) {
      Ext x(*f.left);
      Ten dx = basis(f.left->first, f.left->second);
      dw = ops_.delta_product(Side::succ, x, dx, w, dw);
    }
    return dw;
  }

  struct Cut {
    TypedTree rest;                                 // R^c(T)
    std::vector<Decorated<TypedTree>> pieces;       // T_e(α), left to right
  };

  // All cuts of t, including the empty one; d is the decoration carried down to t's root.
  std::vector<Cut> all_cuts(const TypedTree& t, Symbol d) const {
    if (t.is_leaf()) return {Cut{t, {}}};
    const auto& bl = nd_.inv_left->second;
    const auto& br = nd_.inv_right->second;
    auto side_options = [&](const TypedTree& child, OptSymbol type, bool left_edge) {
      std::vector<std::pair<Cut, OptSymbol>> opts;  // (cut of the child, type kept on the edge)
      if (!type) {
        opts.push_back({Cut{child, {}}, type});
        return opts;
      }
      const Symbol dd = left_edge ? br(*type, d) : bl(d, *type);
      opts.push_back({Cut{TypedTree::leaf(), {{dd, child}}}, std::nullopt});
      for (auto& c : all_cuts(child, dd)) opts.push_back({std::move(c), type});
      return opts;
    };
    auto lo = side_options(t.left(), t.left_type(), true);
    auto ro = side_options(t.right(), t.right_type(), false);
    std::vector<Cut> out;
    for (auto& [lc, lt] : lo)
      for (auto& [rc, rt] : ro) {
        Cut c{TypedTree::graft_unchecked(lc.rest, lt, rt, rc.rest), lc.pieces};
        c.pieces.insert(c.pieces.end(), rc.pieces.begin(), rc.pieces.end());
        out.push_back(std::move(c));
      }
    return out;
  }

  Ten cuts(Symbol a, const TypedTree& t) {
    Ten out;
    for (auto& c : all_cuts(t, a)) {
      if (c.pieces.empty()) continue;
      Ext prod(c.pieces[0]);
      for (std::size_t i = 1; i < c.pieces.size(); ++i) prod = ops_.dot(prod, Ext(c.pieces[i]));
      out += tensor(Ext(Decorated<TypedTree>{a, c.rest}), prod);
    }
    return out;
  }

  const FiniteEds& e_;
  CoproductMode mode_;
  NondegeneracyReport nd_;
  detail::Dendri<TypedTree, S> ops_;
  std::map<Decorated<TypedTree>, Ten> memo_;
};

template <class S>
TensorPoly<TypedTree, S> coproduct_tree(const FiniteEds& e, CoproductMode mode,
                                        const ExtendedElement<TypedTree, S>& x) {
  TreeCoproduct<S> delta(e, mode);
  return delta(x);
}

// Coproduct on 𝕂Ω ⊗ Sh⁺_Ω(V). The recursive mode factors α₁⊗(v₁ α₂ v₂ …) as
// (α₁↶α₂ ⊗ v₁) ≺ (α₁◀α₂ ⊗ v₂ …); the deconcatenation mode is the closed formula.
template <class S = Rational>
class WordCoproduct {
 public:
  using Ext = ExtendedElement<TypedWord, S>;
  using Ten = TensorPoly<TypedWord, S>;

  WordCoproduct(const FiniteEds& e, WordCoproductMode mode, bool check_preconditions = true)
      : e_(e), mode_(mode), nd_(nondegeneracy(e)), ops_{e_} {
    if (!nd_.left_bijective) throw std::domain_error("the word coproduct needs an invertible φ_←");
    if (check_preconditions) {
      detail::require_nondegenerate(nd_, "the word coproduct");
      if (mode == WordCoproductMode::deconcatenation && !is_commutative(e))
        throw std::domain_error("the deconcatenation formula needs a commutative EDS");
    }
  }

  const Ten& basis(Symbol a, const TypedWord& w) {
    detail::check_symbol(e_, a);
    Decorated<TypedWord> key{a, w};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Ten v = mode_ == WordCoproductMode::recursive ? recursive(a, w) : deconcatenation(a, w);
    return memo_.emplace(std::move(key), std::move(v)).first->second;
  }

  Ten operator()(const Ext& x) {
    Ten out;
    for (auto& [d, c] : x) out += c * basis(d.first, d.second);
    return out;
  }

 private:
  Ten recursive(Symbol a, const TypedWord& w) {
    if (w.length() == 1) return {};
    const auto& [cl, bl] = *nd_.inv_left;
    const Symbol a2 = w.types[0];
    Ext x(Decorated<TypedWord>{cl(a, a2), TypedWord::letter(w.letters[0])});
    Decorated<TypedWord> rest{bl(a, a2), w.tail()};
    return ops_.delta_product(Side::prec, x, Ten{}, Ext(rest), basis(rest.first, rest.second));
  }

  Ten deconcatenation(Symbol a, const TypedWord& w) const {
    const auto& bl = nd_.inv_left->second;
    Ten out;
    const std::size_t n = w.length();
    Symbol chain = a;
    for (std::size_t i = 1; i < n; ++i) {
      chain = bl(chain, w.types[i - 1]);
      TypedWord head({w.letters.begin(), w.letters.begin() + static_cast<long>(i)},
                     {w.types.begin(), w.types.begin() + static_cast<long>(i) - 1});
      TypedWord tail({w.letters.begin() + static_cast<long>(i), w.letters.end()},
                     {w.types.begin() + static_cast<long>(i), w.types.end()});
      out.add({{a, std::move(head)}, {chain, std::move(tail)}}, S(1));
    }
    return out;
  }

  const FiniteEds& e_;
  WordCoproductMode mode_;
  NondegeneracyReport nd_;
  detail::Dendri<TypedWord, S> ops_;
  std::map<Decorated<TypedWord>, Ten> memo_;
};

template <class S>
TensorPoly<TypedWord, S> coproduct_word(const FiniteEds& e, const ExtendedElement<TypedWord, S>& x,
                                        WordCoproductMode mode = WordCoproductMode::deconcatenation) {
  WordCoproduct<S> delta(e, mode);
  return delta(x);
}

// Basis of the extended algebra in each degree.
inline std::vector<std::vector<Decorated<TypedTree>>> extended_tree_basis(std::size_t omega, std::size_t bound) {
  std::vector<std::vector<Decorated<TypedTree>>> out(bound + 1);
  for (std::size_t d = 1; d <= bound; ++d)
    for (Symbol a = 0; a < omega; ++a)
      for (auto& t : enumerate_basis(omega, d)) out[d].emplace_back(a, t);
  return out;
}

inline std::vector<std::vector<Decorated<TypedWord>>> extended_word_basis(std::size_t omega, std::size_t letters,
                                                                          std::size_t bound) {
  std::vector<std::vector<Decorated<TypedWord>>> out(bound + 1);
  for (std::size_t d = 1; d <= bound; ++d)
    for (Symbol a = 0; a < omega; ++a)
      for (auto& w : enumerate_words(letters, omega, d)) out[d].emplace_back(a, w);
  return out;
}

template <class K>
struct BialgebraViolation {
  std::string property;  // primitive, homogeneity, coassociativity, prec-compatibility, succ-compatibility
  Decorated<K> x;
  std::optional<Decorated<K>> y;
};

template <class K>
struct BialgebraReport {
  std::size_t elements = 0, pairs = 0;
  std::vector<BialgebraViolation<K>> violations;  // at most one per property
  bool passed() const { return violations.empty(); }
};

// Checks Δ(generators) = 0, homogeneity and coassociativity on every basis element of degree
// <= bound, and both compatibilities on every basis pair of total degree <= bound.
// `delta(d)` returns Δ of a basis element and must be safe to call concurrently once warmed up.
template <class K, class S, class Delta>
BialgebraReport<K> check_bialgebra(const FiniteEds& e, const std::vector<std::vector<Decorated<K>>>& basis,
                                   std::size_t bound, Delta&& delta, unsigned jobs = 0) {
  using Ext = ExtendedElement<K, S>;
  using Ten = TensorPoly<K, S>;
  detail::Dendri<K, S> ops{e};
  BialgebraReport<K> rep;
  auto have = [&](std::size_t d) { return d < basis.size(); };

  std::map<Decorated<K>, Ten> cache;
  for (std::size_t d = 1; d <= bound && have(d); ++d)
    for (auto& x : basis[d]) cache.emplace(x, delta(x));
  auto D = [&](const Decorated<K>& x) -> const Ten& {
    auto it = cache.find(x);
    if (it == cache.end()) throw std::logic_error("coproduct requested outside the precomputed range");
    return it->second;
  };
  auto DExt = [&](const Ext& x) {
    Ten out;
    for (auto& [d, c] : x) out += c * D(d);
    return out;
  };

  std::vector<bool> seen(5, false);
  auto report = [&](int id, const char* name, const Decorated<K>& x, std::optional<Decorated<K>> y = {}) {
    if (seen[id]) return;
    seen[id] = true;
    rep.violations.push_back({name, x, std::move(y)});
  };

  for (std::size_t d = 1; d <= bound && have(d); ++d)
    for (auto& x : basis[d]) {
      ++rep.elements;
      const Ten& dx = D(x);
      if (d == 1 && !dx.empty()) report(0, "primitive", x);
      for (auto& [t, c] : dx) {
        auto d1 = Algebra<K>::degree(t.first.second), d2 = Algebra<K>::degree(t.second.second);
        if (d1 == 0 || d2 == 0 || d1 + d2 != d) {
          report(1, "homogeneity", x);
          break;
        }
      }
      Tensor3Poly<K, S> lhs, rhs;
      for (auto& [t, c] : dx) {
        for (auto& [u, cu] : D(t.first)) lhs.add({u.first, u.second, t.second}, c * cu);
        for (auto& [u, cu] : D(t.second)) rhs.add({t.first, u.first, u.second}, c * cu);
      }
      if (lhs != rhs) report(2, "coassociativity", x);
    }

  // compatibilities, split across workers by left factor
  std::vector<std::pair<Decorated<K>, Decorated<K>>> pairs;
  for (std::size_t i = 1; i < bound && have(i); ++i)
    for (std::size_t j = 1; i + j <= bound && have(j); ++j)
      for (auto& x : basis[i])
        for (auto& y : basis[j]) pairs.emplace_back(x, y);
  rep.pairs = pairs.size();
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(jobs, pairs.size())));
  std::vector<std::optional<std::pair<int, std::size_t>>> first(jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < pairs.size(); k += jobs) {
        auto& [x, y] = pairs[k];
        Ext X(x), Y(y);
        for (Side s : {Side::prec, Side::succ}) {
          auto lhs = DExt(ops.mul(s, X, Y));
          auto rhs = ops.delta_product(s, X, D(x), Y, D(y));
          if (lhs != rhs) {
            int id = s == Side::prec ? 3 : 4;
            if (!first[w] || *first[w] > std::pair{id, k}) first[w] = std::pair{id, k};
          }
        }
      }
    });
  for (auto& t : pool) t.join();
  // deterministic: report the smallest pair index per property
  std::map<int, std::size_t> best;
  for (auto& f : first)
    if (f) {
      auto [id, k] = *f;
      if (!best.count(id) || best[id] > k) best[id] = k;
    }
  for (auto& [id, k] : best) report(id, id == 3 ? "prec-compatibility" : "succ-compatibility", pairs[k].first, pairs[k].second);
  return rep;
}

enum class AlgebraKind { trees, words };

inline BialgebraReport<TypedTree> check_tree_bialgebra(const FiniteEds& e, std::size_t bound,
                                                       CoproductMode mode = CoproductMode::recursive,
                                                       unsigned jobs = 0) {
  TreeCoproduct<long long> delta(e, mode);
  auto basis = extended_tree_basis(e.size(), bound);
  return check_bialgebra<TypedTree, long long>(
      e, basis, bound, [&](const Decorated<TypedTree>& x) { return delta.basis(x.first, x.second); }, jobs);
}

// Preconditions of the word coproduct are not enforced here, so the closed formula can be
// tested on EDS where it is not expected to hold.
inline BialgebraReport<TypedWord> check_word_bialgebra(const FiniteEds& e, std::size_t bound,
                                                       WordCoproductMode mode = WordCoproductMode::recursive,
                                                       std::size_t letters = 2, unsigned jobs = 0) {
  WordCoproduct<long long> delta(e, mode, false);
  auto basis = extended_word_basis(e.size(), letters, bound);
  return check_bialgebra<TypedWord, long long>(
      e, basis, bound, [&](const Decorated<TypedWord>& x) { return delta.basis(x.first, x.second); }, jobs);
}

// Terms where the recursive and cut coproducts differ.
struct CoproductDiscrepancy {
  Symbol alpha;
  TypedTree tree;
  std::pair<Decorated<TypedTree>, Decorated<TypedTree>> term;
  long long recursive_coef, cuts_coef;
};

inline std::vector<CoproductDiscrepancy> coproduct_discrepancies(const FiniteEds& e, std::size_t bound) {
  TreeCoproduct<long long> rec(e, CoproductMode::recursive), cut(e, CoproductMode::cuts);
  std::vector<CoproductDiscrepancy> out;
  for (std::size_t d = 1; d <= bound; ++d)
    for (auto& t : enumerate_basis(e.size(), d))
      for (Symbol a = 0; a < e.size(); ++a) {
        auto diff = rec.basis(a, t) - cut.basis(a, t);
        for (auto& [term, c] : diff)
          out.push_back({a, t, term, rec.basis(a, t).coefficient(term), cut.basis(a, t).coefficient(term)});
      }
  return out;
}

// Two generator pairs with equal products: no coproduct with primitive generators can then
// satisfy Δ(x≺y) = x⊗y (resp. Δ(x≻y) = y⊗x).
struct ProductCollision {
  Side side;
  std::pair<Symbol, Symbol> first, second;
  ExtendedElement<TypedTree, long long> product;
};

inline std::optional<ProductCollision> find_product_collision(const FiniteEds& e) {
  const auto n = static_cast<Symbol>(e.size());
  using Ext = ExtendedElement<TypedTree, long long>;
  auto gen = [](Symbol a) { return Ext(Decorated<TypedTree>{a, TypedTree::corolla()}); };
  for (Side s : {Side::prec, Side::succ}) {
    std::map<Ext, std::pair<Symbol, Symbol>, std::function<bool(const Ext&, const Ext&)>> seen(
        [](const Ext& x, const Ext& y) { return x.terms() < y.terms(); });
    for (Symbol a = 0; a < n; ++a)
      for (Symbol b = 0; b < n; ++b) {
        auto p = scalar_extension_product(e, s, gen(a), gen(b));
        auto [it, fresh] = seen.emplace(p, std::pair{a, b});
        if (!fresh) return ProductCollision{s, it->second, {a, b}, p};
      }
  }
  return std::nullopt;
}

// Dimensions, per degree 1..max_degree, of the span of all dendriform words in the generators α⊗∨.
inline std::vector<std::size_t> generated_span_dimensions(const FiniteEds& e, std::size_t max_degree) {
  using Ext = ExtendedElement<TypedTree, Rational>;
  const std::size_t w = e.size();
  std::vector<std::vector<Ext>> span(max_degree + 1);
  std::vector<std::size_t> dims;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::map<Decorated<TypedTree>, std::size_t> index;
    for (Symbol a = 0; a < w; ++a)
      for (auto& t : enumerate_basis(w, d)) index.emplace(Decorated<TypedTree>{a, t}, index.size());
    EchelonBasis<Rational> basis(index.size());
    auto push = [&](const Ext& x) {
      std::vector<Rational> v(index.size());
      for (auto& [k, c] : x) v[index.at(k)] = c;
      if (basis.add(std::move(v))) span[d].push_back(x);
    };
    if (d == 1) {
      for (Symbol a = 0; a < w; ++a) push(Ext(Decorated<TypedTree>{a, TypedTree::corolla()}));
    } else {
      for (std::size_t i = 1; i < d; ++i)
        for (auto& x : span[i])
          for (auto& y : span[d - i])
            for (Side s : {Side::prec, Side::succ}) push(scalar_extension_product(e, s, x, y));
    }
    dims.push_back(basis.rank());
  }
  return dims;
}

}  // namespace eds
