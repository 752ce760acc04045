#pragma once

#include "eds/eds.hpp"
#include "eds/linalg.hpp"
#include "eds/lincomb.hpp"
#include "eds/tree.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace eds {

// Element of P_Ω(arity), a combination of typed trees with `arity` internal vertices.
template <class S = Rational>
struct OperadElement {
  std::size_t arity = 1;
  TreePoly<S> value;

  OperadElement() : value(TypedTree::corolla()) {}
  OperadElement(std::size_t n, TreePoly<S> v) : arity(n), value(std::move(v)) {
    if (n == 0) throw std::invalid_argument("operad elements have arity >= 1");
    for (auto& [t, c] : value)
      if (t.vertices() != n) throw std::invalid_argument("operad element is not homogeneous of its arity");
  }
  explicit OperadElement(const TypedTree& t) : OperadElement(t.vertices(), TreePoly<S>(t)) {}

  static OperadElement identity() { return OperadElement(); }

  friend bool operator==(const OperadElement&, const OperadElement&) = default;
};

template <class S = Rational>
OperadElement<S> prec_generator(Symbol a) {
  return OperadElement<S>(right_comb(a));
}
template <class S = Rational>
OperadElement<S> succ_generator(Symbol a) {
  return OperadElement<S>(left_comb(a));
}

namespace detail {

inline IntTreePoly compose_basis(const FiniteEds& e, const TypedTree& t, const TypedTree* args, std::size_t k) {
  if (t.is_leaf()) return IntTreePoly(TypedTree::leaf());
  auto t1 = t.left(), t2 = t.right();
  const std::size_t i = t1.vertices();
  auto lhs = compose_basis(e, t1, args, i);
  auto rhs = compose_basis(e, t2, args + i + 1, k - i - 1);
  const TypedTree& mid = args[i];
  IntTreePoly out;
  for (auto& [l, cl] : lhs) {
    auto lm = typed_product_unital(e, Side::succ, t.left_type(), l, mid);
    for (auto& [x, cx] : lm)
      for (auto& [r, cr] : rhs)
        for (auto& [y, cy] : typed_product_unital(e, Side::prec, t.right_type(), x, r)) out.add(y, cl * cx * cr * cy);
  }
  return out;
}

}  // namespace detail

// t ∘ (args...) on basis trees.
inline IntTreePoly compose(const FiniteEds& e, const TypedTree& t, const std::vector<TypedTree>& args) {
  if (t.is_leaf()) throw std::invalid_argument("compose: the empty tree is not an operation");
  if (args.size() != t.vertices())
    throw std::invalid_argument("compose: arity " + std::to_string(t.vertices()) + " but " +
                                std::to_string(args.size()) + " arguments");
  for (auto& a : args)
    if (a.is_leaf()) throw std::invalid_argument("compose: arguments must have arity >= 1");
  return detail::compose_basis(e, t, args.data(), args.size());
}

template <class S>
OperadElement<S> compose(const FiniteEds& e, const OperadElement<S>& t, const std::vector<OperadElement<S>>& args) {
  if (args.size() != t.arity)
    throw std::invalid_argument("compose: arity " + std::to_string(t.arity) + " but " + std::to_string(args.size()) +
                                " arguments");
  std::size_t arity = 0;
  for (auto& a : args) arity += a.arity;
  TreePoly<S> out;
  std::vector<TypedTree> pick(args.size());
  // expand multilinearly over the argument terms
  std::function<void(std::size_t, const TypedTree&, S)> rec = [&](std::size_t j, const TypedTree& root, S c) {
    if (j == args.size()) {
      for (auto& [y, cy] : compose(e, root, pick)) out.add(y, c * S(cy));
      return;
    }
    for (auto& [u, cu] : args[j].value) {
      pick[j] = u;
      rec(j + 1, root, c * cu);
    }
  };
  for (auto& [root, c] : t.value) rec(0, root, c);
  return OperadElement<S>(arity, std::move(out));
}

// m = Σ a_α ≺_α + Σ b_α ≻_α.
struct Generator {
  Side side = Side::prec;
  Symbol type = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

template <class S = Rational>
class Arity2Element {
 public:
  Arity2Element() = default;

  Arity2Element& set(Side side, Symbol a, const S& c) {
    Generator g{side, a};
    auto cur = coefficients_.coefficient(g);
    coefficients_.add(g, c - cur);
    return *this;
  }
  S prec(Symbol a) const { return coefficients_.coefficient({Side::prec, a}); }
  S succ(Symbol a) const { return coefficients_.coefficient({Side::succ, a}); }
  S coefficient(Side side, Symbol a) const { return coefficients_.coefficient({side, a}); }

  const LinComb<Generator, S>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }

  OperadElement<S> to_operad() const {
    TreePoly<S> v;
    for (auto& [g, c] : coefficients_) v.add(g.side == Side::prec ? right_comb(g.type) : left_comb(g.type), c);
    return OperadElement<S>(2, std::move(v));
  }

  friend Arity2Element operator+(Arity2Element x, const Arity2Element& y) {
    x.coefficients_ += y.coefficients_;
    return x;
  }
  friend Arity2Element operator*(const S& s, Arity2Element x) {
    x.coefficients_ *= s;
    return x;
  }
  friend bool operator==(const Arity2Element&, const Arity2Element&) = default;

 private:
  LinComb<Generator, S> coefficients_;
};

enum class CheckMethod { equations, composition };

struct OperadWitness {
  // Equation family (1-based) and the pair (α, β) in equations mode;
  // relation index and a tree with nonzero coefficient in composition mode.
  int family = 0;
  Symbol alpha = 0, beta = 0;
  std::optional<TypedTree> tree;
};

struct OperadCheck {
  bool holds = true;
  std::optional<OperadWitness> witness;
  explicit operator bool() const { return holds; }
};

namespace detail {

// Preimages of every pair under φ_← and φ_→.
struct Fibers {
  std::size_t n;
  std::vector<std::vector<std::pair<Symbol, Symbol>>> left, right;
  explicit Fibers(const FiniteEds& e) : n(e.size()), left(n * n), right(n * n) {
    for (Symbol a = 0; a < n; ++a)
      for (Symbol b = 0; b < n; ++b) {
        auto [p, q] = e.phi_left(a, b);
        auto [r, s] = e.phi_right(a, b);
        left[p * n + q].emplace_back(a, b);
        right[r * n + s].emplace_back(a, b);
      }
  }
  template <class S, class F, class G>
  S sum_left(Symbol a, Symbol b, F&& f, G&& g) const {
    S s(0);
    for (auto [x, y] : left[a * n + b]) s += f(x) * g(y);
    return s;
  }
  template <class S, class F, class G>
  S sum_right(Symbol a, Symbol b, F&& f, G&& g) const {
    S s(0);
    for (auto [x, y] : right[a * n + b]) s += f(x) * g(y);
    return s;
  }
};

template <class S>
OperadCheck first_nonzero(const TreePoly<S>& diff, int relation) {
  if (diff.empty()) return {};
  return {false, OperadWitness{relation, 0, 0, diff.begin()->first}};
}

template <class S>
OperadCheck associative_by_equations(const FiniteEds& e, const Arity2Element<S>& m) {
  const auto n = static_cast<Symbol>(e.size());
  auto a = [&](Symbol x) { return m.prec(x); };
  auto b = [&](Symbol x) { return m.succ(x); };
  auto fail = [](int f, Symbol x, Symbol y) { return OperadCheck{false, OperadWitness{f, x, y, std::nullopt}}; };
  if (nondegeneracy(e).nondegenerate()) {
    for (Symbol x = 0; x < n; ++x)
      for (Symbol y = 0; y < n; ++y) {
        auto [l1, l2] = e.phi_left(x, y);
        auto [r1, r2] = e.phi_right(x, y);
        if (b(r1) * b(r2) != b(x) * b(y)) return fail(1, x, y);
        if (a(l1) * a(l2) != a(x) * a(y)) return fail(2, x, y);
        if (b(l1) * a(l2) != b(x) * b(y)) return fail(3, x, y);
        if (a(r1) * b(r2) != a(x) * a(y)) return fail(4, x, y);
      }
    return {};
  }
  Fibers fib(e);
  for (Symbol x = 0; x < n; ++x)
    for (Symbol y = 0; y < n; ++y) {
      if (b(x) * b(y) != fib.sum_right<S>(x, y, b, b)) return fail(1, x, y);
      if (a(x) * a(y) != fib.sum_left<S>(x, y, a, a)) return fail(2, x, y);
      if (b(x) * a(y) != fib.sum_left<S>(x, y, b, b)) return fail(3, x, y);
      if (a(x) * b(y) != fib.sum_right<S>(x, y, a, a)) return fail(4, x, y);
    }
  return {};
}

template <class S>
OperadCheck dendriform_by_equations(const FiniteEds& e, const Arity2Element<S>& p, const Arity2Element<S>& q) {
  const auto n = static_cast<Symbol>(e.size());
  auto a = [&](Symbol x) { return p.prec(x); };
  auto b = [&](Symbol x) { return p.succ(x); };
  auto c = [&](Symbol x) { return q.prec(x); };
  auto d = [&](Symbol x) { return q.succ(x); };
  auto bd = [&](Symbol x) { return b(x) + d(x); };
  auto ac = [&](Symbol x) { return a(x) + c(x); };
  Fibers fib(e);
  for (Symbol x = 0; x < n; ++x)
    for (Symbol y = 0; y < n; ++y) {
      const S lhs[13] = {b(x) * b(y), a(x) * ac(y),  b(x) * a(y), a(x) * bd(y), b(x) * c(y),
                         S(0),        b(x) * d(y),   S(0),        c(x) * a(y),  c(x) * c(y),
                         d(x) * bd(y), c(x) * d(y), d(x) * ac(y)};
      const S rhs[13] = {fib.sum_right<S>(x, y, b, bd), fib.sum_left<S>(x, y, a, a),
                         fib.sum_left<S>(x, y, b, bd),  fib.sum_right<S>(x, y, a, a),
                         S(0),                          fib.sum_left<S>(x, y, d, b),
                         fib.sum_right<S>(x, y, d, b),  fib.sum_right<S>(x, y, c, a),
                         fib.sum_left<S>(x, y, c, a),   fib.sum_left<S>(x, y, ac, c),
                         fib.sum_right<S>(x, y, d, d),  fib.sum_right<S>(x, y, ac, c),
                         fib.sum_left<S>(x, y, d, d)};
      for (int f = 0; f < 13; ++f)
        if (lhs[f] != rhs[f]) return {false, OperadWitness{f + 1, x, y, std::nullopt}};
    }
  return {};
}

}  // namespace detail

// m∘(I,m) = m∘(m,I). The equations method uses the nondegenerate form when it applies.
template <class S>
OperadCheck check_associative(const FiniteEds& e, const Arity2Element<S>& m,
                              CheckMethod method = CheckMethod::equations) {
  for (auto& [g, c] : m.coefficients()) detail::check_symbol(e, g.type);
  if (method == CheckMethod::equations) return detail::associative_by_equations(e, m);
  const auto op = m.to_operad();
  const auto id = OperadElement<S>::identity();
  auto diff = compose(e, op, {op, id}).value - compose(e, op, {id, op}).value;
  return detail::first_nonzero(diff, 1);
}

// The three dendriform relations for (≺, ≻) = (p, s).
template <class S>
OperadCheck check_dendriform_pair(const FiniteEds& e, const Arity2Element<S>& p, const Arity2Element<S>& s,
                                  CheckMethod method = CheckMethod::equations) {
  for (auto& [g, c] : p.coefficients()) detail::check_symbol(e, g.type);
  for (auto& [g, c] : s.coefficients()) detail::check_symbol(e, g.type);
  if (method == CheckMethod::equations) return detail::dendriform_by_equations(e, p, s);
  const auto P = p.to_operad(), Q = s.to_operad(), sum = (p + s).to_operad();
  const auto id = OperadElement<S>::identity();
  if (auto r = detail::first_nonzero(compose(e, P, {P, id}).value - compose(e, P, {id, sum}).value, 1); !r) return r;
  if (auto r = detail::first_nonzero(compose(e, P, {Q, id}).value - compose(e, Q, {id, P}).value, 2); !r) return r;
  return detail::first_nonzero(compose(e, Q, {id, Q}).value - compose(e, Q, {sum, id}).value, 3);
}

inline constexpr std::uint64_t kSearchLimit = 10'000'000;

// Every associative m over F_P, in lexicographic order of (a_0..a_{ω-1}, b_0..b_{ω-1}).
template <std::uint32_t P>
std::vector<Arity2Element<Fp<P>>> solve_associative_fp(const FiniteEds& e, unsigned jobs = 0) {
  const std::size_t w = e.size();
  const double count = std::pow(static_cast<double>(P), 2.0 * static_cast<double>(w));
  if (count > static_cast<double>(kSearchLimit))
    throw std::invalid_argument("search space " + std::to_string(P) + "^" + std::to_string(2 * w) +
                                " exceeds the limit of 10^7");
  const auto total = static_cast<std::uint64_t>(count);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));

  auto decode = [&](std::uint64_t idx) {
    Arity2Element<Fp<P>> m;
    for (std::size_t k = 2 * w; k-- > 0;) {
      auto v = static_cast<long long>(idx % P);
      idx /= P;
      m.set(k < w ? Side::prec : Side::succ, static_cast<Symbol>(k % w), Fp<P>(v));
    }
    return m;
  };
  std::vector<std::vector<std::uint64_t>> found(jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      const std::uint64_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
      for (std::uint64_t i = lo; i < hi; ++i)
        if (check_associative(e, decode(i))) found[j].push_back(i);
    });
  for (auto& t : pool) t.join();
  std::vector<Arity2Element<Fp<P>>> out;
  for (auto& part : found)
    for (auto i : part) out.push_back(decode(i));
  return out;
}

// Arity-3 component of the Koszul dual. Basis of the free part: outer ∘ (inner, I) and
// outer ∘ (I, inner) with outer, inner ∈ {⊣_α, ⊢_α}, so 8ω² vectors.
inline std::size_t koszul_dual_dim3(const FiniteEds& e) {
  const std::size_t n = e.size();
  enum : int { L = 0, R = 1 };                  // inner operation sits on the left or right input
  enum : int { dashv = 0, vdash = 1 };          // ⊣ and ⊢
  auto idx = [n](int pos, int outer, Symbol a, int inner, Symbol b) {
    return (((static_cast<std::size_t>(pos) * 2 + outer) * n + a) * 2 + inner) * n + b;
  };
  const std::size_t dim = 8 * n * n;
  EchelonBasis<Rational> rel(dim);
  auto add = [&](std::size_t x, std::size_t y) {
    std::vector<Rational> v(dim);
    v[x] += 1;
    v[y] -= 1;
    rel.add(std::move(v));
  };
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b) {
      add(idx(L, dashv, b, dashv, a), idx(R, dashv, e.larrow(a, b), dashv, e.ltri(a, b)));
      add(idx(L, dashv, b, dashv, a), idx(R, dashv, e.rarrow(a, b), vdash, e.rtri(a, b)));
      add(idx(R, vdash, b, dashv, a), idx(L, dashv, a, vdash, b));
      add(idx(R, vdash, a, vdash, b), idx(L, vdash, e.rarrow(a, b), vdash, e.rtri(a, b)));
      add(idx(R, vdash, a, vdash, b), idx(L, vdash, e.larrow(a, b), dashv, e.ltri(a, b)));
    }
  return dim - rel.rank();
}

// dim P_Ω(n) = Catalan(n)·ω^{n-1}.
inline std::uint64_t operad_dimension_formula(std::size_t omega, std::size_t n) {
  std::uint64_t cat = 1;
  for (std::size_t k = 0; k < n; ++k) cat = cat * 2 * (2 * k + 1) / (k + 2);
  std::uint64_t p = 1;
  for (std::size_t k = 1; k < n; ++k) p *= omega;
  return cat * p;
}

}  // namespace eds
