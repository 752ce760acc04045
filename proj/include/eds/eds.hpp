#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace eds {

using Symbol = std::uint8_t;
using Triple = std::array<Symbol, 3>;

inline constexpr std::size_t kMaxCarrier = 250;

// n x n multiplication table on {0, ..., n-1}, row = left argument.
class OpTable {
 public:
  OpTable() = default;
  OpTable(std::size_t n, std::vector<Symbol> cells) : n_(n), cells_(std::move(cells)) {
    if (n == 0 || n > kMaxCarrier) throw std::invalid_argument("table size out of range");
    if (cells_.size() != n * n) throw std::invalid_argument("table has wrong number of cells");
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i] >= n)
        throw std::invalid_argument("table entry " + std::to_string(cells_[i]) + " at (" +
                                    std::to_string(i / n) + "," + std::to_string(i % n) +
                                    ") is out of range");
  }

  template <class F>
  static OpTable from_fn(std::size_t n, F&& f) {
    std::vector<Symbol> c(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) c[a * n + b] = static_cast<Symbol>(f(Symbol(a), Symbol(b)));
    return OpTable(n, std::move(c));
  }
  static OpTable constant(std::size_t n, Symbol c) {
    return from_fn(n, [c](Symbol, Symbol) { return c; });
  }
  static OpTable left_projection(std::size_t n) {
    return from_fn(n, [](Symbol a, Symbol) { return a; });
  }
  static OpTable right_projection(std::size_t n) {
    return from_fn(n, [](Symbol, Symbol b) { return b; });
  }

  std::size_t size() const { return n_; }
  Symbol operator()(Symbol a, Symbol b) const { return cells_[a * n_ + b]; }
  const std::vector<Symbol>& cells() const { return cells_; }

  OpTable transposed() const {
    return from_fn(n_, [this](Symbol a, Symbol b) { return (*this)(b, a); });
  }

  friend bool operator==(const OpTable&, const OpTable&) = default;
  friend auto operator<=>(const OpTable&, const OpTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Symbol> cells_;
};

enum class Op { left, right, tri_left, tri_right };

// The four tables (<-, ->, <|, |>) of an extended diassociative semigroup.
// Construction only checks shapes; validity is what check_eds decides.
class FiniteEds {
 public:
  FiniteEds(OpTable left, OpTable right, OpTable tri_left, OpTable tri_right, std::string label = {})
      : t_{std::move(left), std::move(right), std::move(tri_left), std::move(tri_right)},
        label_(std::move(label)) {
    for (auto& t : t_)
      if (t.size() != t_[0].size()) throw std::invalid_argument("EDS tables have different sizes");
  }

  std::size_t size() const { return t_[0].size(); }
  const std::string& label() const { return label_; }
  const OpTable& table(Op op) const { return t_[static_cast<int>(op)]; }

  Symbol larrow(Symbol a, Symbol b) const { return t_[0](a, b); }
  Symbol rarrow(Symbol a, Symbol b) const { return t_[1](a, b); }
  Symbol ltri(Symbol a, Symbol b) const { return t_[2](a, b); }
  Symbol rtri(Symbol a, Symbol b) const { return t_[3](a, b); }

  std::pair<Symbol, Symbol> phi_left(Symbol a, Symbol b) const { return {larrow(a, b), ltri(a, b)}; }
  std::pair<Symbol, Symbol> phi_right(Symbol a, Symbol b) const { return {rarrow(a, b), rtri(a, b)}; }

  FiniteEds with_label(std::string label) const {
    FiniteEds e = *this;
    e.label_ = std::move(label);
    return e;
  }

  // sigma maps old symbols to new ones.
  FiniteEds relabeled(const std::vector<Symbol>& sigma) const {
    std::size_t n = size();
    std::vector<Symbol> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[sigma[i]] = static_cast<Symbol>(i);
    auto re = [&](const OpTable& t) {
      return OpTable::from_fn(n, [&](Symbol a, Symbol b) { return sigma[t(inv[a], inv[b])]; });
    };
    return FiniteEds(re(t_[0]), re(t_[1]), re(t_[2]), re(t_[3]), label_);
  }

  // Concatenated row-major cells of the four tables.
  std::vector<Symbol> flat() const {
    std::vector<Symbol> v;
    v.reserve(4 * size() * size());
    for (auto& t : t_) v.insert(v.end(), t.cells().begin(), t.cells().end());
    return v;
  }

  bool same_tables(const FiniteEds& o) const { return t_ == o.t_; }

 private:
  std::array<OpTable, 4> t_;
  std::string label_;
};

struct Violation {
  int axiom = 0;
  Triple witness{};
  Symbol lhs = 0;
  Symbol rhs = 0;
};

struct AxiomReport {
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

enum class CheckMode { pointwise, map_form };

namespace detail {

inline void record(AxiomReport& r, std::vector<bool>& seen, int id, Symbol a, Symbol b, Symbol c,
                   Symbol lhs, Symbol rhs) {
  if (lhs == rhs || seen[id]) return;
  seen[id] = true;
  r.violations.push_back({id, {a, b, c}, lhs, rhs});
}

inline void sort_by_axiom(AxiomReport& r) {
  std::stable_sort(r.violations.begin(), r.violations.end(),
                   [](const Violation& x, const Violation& y) { return x.axiom < y.axiom; });
}

inline AxiomReport check_pointwise(const FiniteEds& e) {
  AxiomReport r;
  std::vector<bool> seen(14, false);
  const auto n = static_cast<Symbol>(e.size());
  auto L = [&](Symbol x, Symbol y) { return e.larrow(x, y); };
  auto R = [&](Symbol x, Symbol y) { return e.rarrow(x, y); };
  auto l = [&](Symbol x, Symbol y) { return e.ltri(x, y); };
  auto t = [&](Symbol x, Symbol y) { return e.rtri(x, y); };
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b)
      for (Symbol c = 0; c < n; ++c) {
        auto rec = [&](int id, Symbol x, Symbol y) { record(r, seen, id, a, b, c, x, y); };
        Symbol m = L(a, L(b, c));
        rec(1, L(L(a, b), c), m);
        rec(1, m, L(a, R(b, c)));
        rec(2, L(R(a, b), c), R(a, L(b, c)));
        Symbol k = R(a, R(b, c));
        rec(3, R(R(a, b), c), k);
        rec(3, R(L(a, b), c), k);
        rec(4, t(a, L(b, c)), t(a, b));
        rec(5, l(R(a, b), c), l(b, c));
        Symbol p = l(a, b), q = l(L(a, b), c);
        rec(6, L(p, q), l(a, L(b, c)));
        rec(7, l(p, q), l(b, c));
        rec(8, R(p, q), l(a, R(b, c)));
        rec(9, t(p, q), t(b, c));
        Symbol u = t(a, R(b, c)), v = t(b, c);
        rec(10, L(u, v), t(L(a, b), c));
        rec(11, l(u, v), l(a, b));
        rec(12, R(u, v), t(R(a, b), c));
        rec(13, t(u, v), t(a, b));
      }
  sort_by_axiom(r);
  return r;
}

// Elementary maps on triples. L/R = phi_<- / phi_->, T = tau; suffix 1 acts on
// slots (1,2), suffix 2 on slots (2,3).
enum class Step { L1, L2, R1, R2, T1, T2 };

inline Triple apply_step(const FiniteEds& e, Step s, Triple x) {
  auto pair = [&](Step s2, Symbol a, Symbol b) -> std::pair<Symbol, Symbol> {
    switch (s2) {
      case Step::L1:
      case Step::L2: return e.phi_left(a, b);
      case Step::R1:
      case Step::R2: return e.phi_right(a, b);
      default: return {b, a};
    }
  };
  bool first = s == Step::L1 || s == Step::R1 || s == Step::T1;
  if (first) {
    auto [p, q] = pair(s, x[0], x[1]);
    return {p, q, x[2]};
  }
  auto [p, q] = pair(s, x[1], x[2]);
  return {x[0], p, q};
}

// Steps compose right to left: the rightmost one is applied first.
inline Triple apply_word(const FiniteEds& e, const std::vector<Step>& w, Triple x) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = apply_step(e, *it, x);
  return x;
}

struct MapEquation {
  int id;
  std::vector<Step> lhs, rhs;
};

inline const std::vector<MapEquation>& map_equations() {
  using enum Step;
  static const std::vector<MapEquation> eqs = {
      {1, {T1, L2, T1, R1}, {R1, L2}},
      {2, {L2, T1, L2, T1, L1}, {L1, L2}},
      {3, {R2, T1, L2, T1, L1}, {L1, R2}},
      {4, {L2, R1, R2}, {R1, T2, L1}},
      {5, {R2, R1, R2}, {R1, T2, R1}},
  };
  return eqs;
}

inline AxiomReport check_map_form(const FiniteEds& e) {
  AxiomReport r;
  const auto n = static_cast<Symbol>(e.size());
  for (auto& eq : map_equations()) {
    bool done = false;
    for (Symbol a = 0; a < n && !done; ++a)
      for (Symbol b = 0; b < n && !done; ++b)
        for (Symbol c = 0; c < n && !done; ++c) {
          Triple x{a, b, c};
          Triple lhs = apply_word(e, eq.lhs, x), rhs = apply_word(e, eq.rhs, x);
          for (int i = 0; i < 3 && !done; ++i)
            if (lhs[i] != rhs[i]) {
              r.violations.push_back({eq.id, x, lhs[i], rhs[i]});
              done = true;
            }
        }
  }
  return r;
}

}  // namespace detail

inline AxiomReport check_eds(const FiniteEds& e, CheckMode mode = CheckMode::pointwise) {
  return mode == CheckMode::pointwise ? detail::check_pointwise(e) : detail::check_map_form(e);
}

inline bool is_eds(const FiniteEds& e) { return check_eds(e).passed(); }

// First diassociativity violation only.
inline std::optional<Violation> diassociativity_violation(const OpTable& L, const OpTable& R) {
  FiniteEds probe(L, R, OpTable::right_projection(L.size()), OpTable::left_projection(L.size()));
  for (auto& v : check_eds(probe).violations)
    if (v.axiom <= 3) return v;
  return std::nullopt;
}

inline std::optional<Triple> associativity_violation(const OpTable& m) {
  const auto n = static_cast<Symbol>(m.size());
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b)
      for (Symbol c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) return Triple{a, b, c};
  return std::nullopt;
}

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

// EDS(Omega, <-, ->): <| is the right projection and |> the left projection.
inline FiniteEds eds_from_diassociative(const OpTable& left, const OpTable& right, std::string label = {}) {
  if (left.size() != right.size()) throw ConstructionError("table sizes differ");
  if (auto v = diassociativity_violation(left, right))
    throw ConstructionError("not diassociative: axiom " + std::to_string(v->axiom) + " fails at " +
                            triple_str(v->witness));
  auto n = left.size();
  return FiniteEds(left, right, OpTable::right_projection(n), OpTable::left_projection(n), std::move(label));
}

// EDS(Omega) = EDS(DS(Omega)).
inline FiniteEds matching_eds(std::size_t n, std::string label = {}) {
  return eds_from_diassociative(OpTable::left_projection(n), OpTable::right_projection(n), std::move(label));
}

// EDS(Omega, *, *).
inline FiniteEds family_eds(const OpTable& star, std::string label = {}) {
  if (auto w = associativity_violation(star))
    throw ConstructionError("not associative at " + triple_str(*w));
  return eds_from_diassociative(star, star, std::move(label));
}

// a <| b = phi_tl(b), a |> b = phi_tr(a).
inline FiniteEds morphism_eds(const OpTable& left, const OpTable& right, const std::vector<Symbol>& phi_tl,
                              const std::vector<Symbol>& phi_tr, std::string label = {}) {
  const auto n = left.size();
  if (phi_tl.size() != n || phi_tr.size() != n) throw ConstructionError("maps have wrong length");
  for (auto s : phi_tl)
    if (s >= n) throw ConstructionError("map value out of range");
  for (auto s : phi_tr)
    if (s >= n) throw ConstructionError("map value out of range");
  if (auto v = diassociativity_violation(left, right))
    throw ConstructionError("not diassociative at " + triple_str(v->witness));
  for (Symbol a = 0; a < n; ++a) {
    auto fail = [&](const std::string& what) {
      throw ConstructionError(what + " fails at " + std::to_string(a));
    };
    if (phi_tl[phi_tl[a]] != phi_tl[a] || phi_tl[phi_tr[a]] != phi_tl[a]) fail("phi_tl idempotence");
    if (phi_tr[phi_tl[a]] != phi_tr[a] || phi_tr[phi_tr[a]] != phi_tr[a]) fail("phi_tr idempotence");
    for (Symbol b = 0; b < n; ++b)
      for (auto* phi : {&phi_tl, &phi_tr}) {
        auto& f = *phi;
        if (f[left(a, b)] != left(f[a], f[b]) || f[right(a, b)] != right(f[a], f[b]))
          throw ConstructionError("map is not a morphism at (" + std::to_string(a) + "," + std::to_string(b) +
                                  ")");
      }
  }
  return FiniteEds(left, right, OpTable::from_fn(n, [&](Symbol, Symbol b) { return phi_tl[b]; }),
                   OpTable::from_fn(n, [&](Symbol a, Symbol) { return phi_tr[a]; }), std::move(label));
}

struct GroupData {
  Symbol unit = 0;
  std::vector<Symbol> inverse;
};

inline GroupData group_data(const OpTable& g) {
  if (auto w = associativity_violation(g)) throw ConstructionError("not a group: not associative at " + triple_str(*w));
  const auto n = static_cast<Symbol>(g.size());
  std::optional<Symbol> unit;
  for (Symbol e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (Symbol a = 0; a < n && ok; ++a) ok = g(e, a) == a && g(a, e) == a;
    if (ok) unit = e;
  }
  if (!unit) throw ConstructionError("not a group: no unit");
  GroupData d{*unit, std::vector<Symbol>(n)};
  for (Symbol a = 0; a < n; ++a) {
    bool found = false;
    for (Symbol b = 0; b < n && !found; ++b)
      if (g(a, b) == *unit && g(b, a) == *unit) {
        d.inverse[a] = b;
        found = true;
      }
    if (!found) throw ConstructionError("not a group: " + std::to_string(a) + " has no inverse");
  }
  return d;
}

inline OpTable cyclic_group(std::size_t n) {
  return OpTable::from_fn(n, [n](Symbol a, Symbol b) { return (a + b) % n; });
}

// EDS*(H, *, K, theta) on H x K, with (h, k) encoded as h + |H| k.
inline FiniteEds star_eds(const OpTable& group, std::size_t k_size, const std::vector<Symbol>& theta,
                          std::string label = {}) {
  const auto gd = group_data(group);
  const std::size_t h = group.size();
  if (k_size == 0 || theta.size() != k_size) throw ConstructionError("theta must have one value per element of K");
  for (auto t : theta)
    if (t >= h) throw ConstructionError("theta value out of range");
  const std::size_t n = h * k_size;
  if (n > kMaxCarrier) throw ConstructionError("carrier too large");
  auto enc = [h](std::size_t x, std::size_t k) { return static_cast<Symbol>(x + h * k); };
  auto H = [h](Symbol s) { return static_cast<Symbol>(s % h); };
  auto K = [h](Symbol s) { return static_cast<std::size_t>(s / h); };
  auto tl = OpTable::from_fn(n, [&](Symbol a, Symbol b) { return enc(group(gd.inverse[H(a)], H(b)), K(b)); });
  auto tr = OpTable::from_fn(n, [&](Symbol a, Symbol b) {
    return enc(group(group(theta[K(b)], gd.inverse[H(b)]), H(a)), K(a));
  });
  return FiniteEds(OpTable::left_projection(n), OpTable::right_projection(n), tl, tr, std::move(label));
}

// EDS*(H, *, omega): K is a single point.
inline FiniteEds star_eds_point(const OpTable& group, Symbol omega, std::string label = {}) {
  return star_eds(group, std::size_t{1}, std::vector<Symbol>{omega}, std::move(label));
}

inline FiniteEds opposite(const FiniteEds& e) {
  auto lbl = e.label().empty() ? std::string{} : e.label() + "^op";
  return FiniteEds(e.table(Op::right).transposed(), e.table(Op::left).transposed(),
                   e.table(Op::tri_right).transposed(), e.table(Op::tri_left).transposed(), lbl);
}

inline bool is_commutative(const FiniteEds& e) {
  const auto n = static_cast<Symbol>(e.size());
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b)
      if (e.rarrow(a, b) != e.larrow(b, a) || e.rtri(a, b) != e.ltri(b, a)) return false;
  return true;
}

struct NondegeneracyReport {
  bool left_bijective = false;
  bool right_bijective = false;
  std::optional<std::pair<OpTable, OpTable>> inv_left;   // (curvearrowleft, blacktriangleleft)
  std::optional<std::pair<OpTable, OpTable>> inv_right;  // (curvearrowright, blacktriangleright)
  std::size_t corank = 0;
  bool nondegenerate() const { return left_bijective && right_bijective; }
};

// Kernel dimension of the linear map (a,b) -> (e_{phi_<-(a,b)}, e_{phi_->(a,b)}).
// Each basis vector goes to a sum of two basis vectors of disjoint blocks, so the
// rank is #vertices - #components of the bipartite graph with these edges.
inline std::size_t corank(const FiniteEds& e) {
  const std::size_t n = e.size(), nn = n * n;
  std::vector<std::size_t> parent(2 * nn);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> used(2 * nn, false);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b) {
      auto [p, q] = e.phi_left(a, b);
      auto [r, s] = e.phi_right(a, b);
      std::size_t u = p * n + q, v = nn + r * n + s;
      used[u] = used[v] = true;
      parent[find(u)] = find(v);
    }
  std::size_t vertices = 0, components = 0;
  for (std::size_t x = 0; x < 2 * nn; ++x)
    if (used[x]) {
      ++vertices;
      if (find(x) == x) ++components;
    }
  return nn - (vertices - components);
}

inline NondegeneracyReport nondegeneracy(const FiniteEds& e) {
  NondegeneracyReport rep;
  const std::size_t n = e.size();
  const auto ns = static_cast<Symbol>(n);
  std::vector<Symbol> c1(n * n), c2(n * n), d1(n * n), d2(n * n);
  std::vector<bool> hitL(n * n, false), hitR(n * n, false);
  rep.left_bijective = rep.right_bijective = true;
  for (Symbol a = 0; a < ns; ++a)
    for (Symbol b = 0; b < ns; ++b) {
      auto [x, y] = e.phi_left(a, b);
      if (hitL[x * n + y]) rep.left_bijective = false;
      hitL[x * n + y] = true;
      c1[x * n + y] = a;  // x curvearrowleft y
      c2[x * n + y] = b;  // x blacktriangleleft y
      auto [u, v] = e.phi_right(a, b);
      if (hitR[u * n + v]) rep.right_bijective = false;
      hitR[u * n + v] = true;
      // phi_->^{-1}(u,v) = (v |>> u, v ~> u), i.e. (a,b)
      d2[v * n + u] = a;  // v blacktriangleright u
      d1[v * n + u] = b;  // v curvearrowright u
    }
  if (rep.left_bijective) rep.inv_left.emplace(OpTable(n, c1), OpTable(n, c2));
  if (rep.right_bijective) rep.inv_right.emplace(OpTable(n, d1), OpTable(n, d2));
  rep.corank = corank(e);
  return rep;
}

// Identities satisfied by the inverse operations of a nondegenerate EDS, with ids 1..15.
inline AxiomReport derived_identity_check(const FiniteEds& e) {
  auto rep = nondegeneracy(e);
  if (!rep.nondegenerate()) throw std::domain_error("derived identities need a nondegenerate EDS");
  const auto& [cl, bl] = *rep.inv_left;
  const auto& [cr, br] = *rep.inv_right;
  AxiomReport r;
  std::vector<bool> seen(16, false);
  const auto n = static_cast<Symbol>(e.size());
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b)
      for (Symbol c = 0; c < n; ++c) {
        auto rec = [&](int id, Symbol x, Symbol y) { detail::record(r, seen, id, a, b, c, x, y); };
        rec(1, cl(cr(a, b), c), cr(a, cl(b, c)));
        rec(2, bl(a, bl(b, c)), bl(bl(a, b), c));
        rec(3, br(br(a, b), c), br(a, br(b, c)));
        rec(4, br(a, cl(b, c)), br(a, b));
        rec(5, bl(cr(a, b), c), bl(b, c));
        rec(6, cl(cl(a, bl(b, c)), cl(b, c)), cl(a, b));
        rec(7, cr(cr(a, b), cr(br(a, b), c)), cr(b, c));
        rec(8, bl(cl(a, bl(b, c)), cl(b, c)), cl(bl(a, b), c));
        rec(9, br(cr(a, b), cr(br(a, b), c)), cr(a, br(b, c)));
        rec(10, cl(cl(a, cr(b, c)), br(b, c)), cl(a, c));
        rec(11, cr(bl(a, b), cr(cl(a, b), c)), cr(a, c));
        rec(12, bl(cl(a, cr(b, c)), br(b, c)), br(b, bl(a, c)));
        rec(13, br(bl(a, b), cr(cl(a, b), c)), bl(br(a, c), b));
        rec(14, br(cl(a, b), c), cl(br(a, c), b));
        rec(15, cr(b, bl(a, c)), bl(a, cr(b, c)));
      }
  detail::sort_by_axiom(r);
  return r;
}

inline std::vector<Symbol> canonical_form(const FiniteEds& e) {
  std::vector<Symbol> sigma(e.size());
  std::iota(sigma.begin(), sigma.end(), Symbol{0});
  std::vector<Symbol> best;
  do {
    auto f = e.relabeled(sigma).flat();
    if (best.empty() || f < best) best = std::move(f);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

// Lexicographically smallest sigma with sigma(a o b) = sigma(a) o' sigma(b) for all four products.
inline std::optional<std::vector<Symbol>> are_isomorphic(const FiniteEds& x, const FiniteEds& y) {
  if (x.size() != y.size()) return std::nullopt;
  std::vector<Symbol> sigma(x.size());
  std::iota(sigma.begin(), sigma.end(), Symbol{0});
  const auto target = y.flat();
  do {
    if (x.relabeled(sigma).flat() == target) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

// Parameters of the standard constructions; the alternative picks the kind.
struct MatchingParams {
  std::size_t size = 1;
};
struct FamilyParams {
  OpTable star;
};
struct MorphismParams {
  OpTable left, right;
  std::vector<Symbol> phi_tl, phi_tr;
};
struct StarParams {
  OpTable group;
  std::size_t k_size = 1;
  std::vector<Symbol> theta;
};
using StandardParams = std::variant<MatchingParams, FamilyParams, MorphismParams, StarParams>;

inline FiniteEds build_standard(const StandardParams& params, std::string label = {}) {
  return std::visit(
      [&](const auto& p) -> FiniteEds {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, MatchingParams>) return matching_eds(p.size, label);
        else if constexpr (std::is_same_v<P, FamilyParams>) return family_eds(p.star, label);
        else if constexpr (std::is_same_v<P, MorphismParams>)
          return morphism_eds(p.left, p.right, p.phi_tl, p.phi_tr, label);
        else return star_eds(p.group, p.k_size, p.theta, label);
      },
      params);
}

// The 24 representatives on {a,b} = {0,1}; tables are listed row-major.
inline std::vector<FiniteEds> catalog2() {
  auto t = [](Symbol a, Symbol b, Symbol c, Symbol d) { return OpTable(2, {a, b, c, d}); };
  const OpTable ma = t(0, 0, 0, 0), mb = t(1, 1, 1, 1), m1 = t(0, 1, 1, 0), m2 = t(1, 0, 0, 1);
  const OpTable tl_eds = t(0, 1, 0, 1), tr_eds = t(0, 0, 1, 1);
  const OpTable sA = ma, lB = ma, rB = t(0, 1, 0, 1), sC = t(0, 0, 0, 1), lD = t(0, 0, 1, 1), rD = ma,
                sE = t(0, 0, 1, 1), lF = t(0, 0, 1, 1), rF = t(0, 1, 0, 1), sG = t(0, 1, 0, 1),
                sH = t(0, 1, 1, 0);
  std::vector<FiniteEds> c;
  auto add = [&](const char* name, const OpTable& l, const OpTable& r, const OpTable& tl, const OpTable& tr) {
    c.emplace_back(l, r, tl, tr, name);
  };
  add("A1", sA, sA, ma, ma);
  add("A2", sA, sA, tl_eds, tr_eds);
  add("B1", lB, rB, ma, ma);
  add("B2", lB, rB, tl_eds, tr_eds);
  add("C1", sC, sC, ma, ma);
  add("C2", sC, sC, ma, mb);
  add("C3", sC, sC, tl_eds, tr_eds);
  add("C4", sC, sC, mb, ma);
  add("C5", sC, sC, mb, mb);
  add("D1", lD, rD, ma, ma);
  add("D2", lD, rD, tl_eds, tr_eds);
  add("E1", sE, sE, ma, ma);
  add("E2", sE, sE, ma, mb);
  add("E3", sE, sE, tl_eds, tr_eds);
  add("F1", lF, rF, ma, ma);
  add("F2", lF, rF, ma, mb);
  add("F3", lF, rF, tl_eds, tr_eds);
  add("F4", lF, rF, m1, m1);
  add("F5", lF, rF, m1, m2);
  add("G1", sG, sG, ma, ma);
  add("G2", sG, sG, ma, mb);
  add("G3", sG, sG, tl_eds, tr_eds);
  add("H1", sH, sH, ma, ma);
  add("H2", sH, sH, tl_eds, tr_eds);
  return c;
}

inline FiniteEds catalog_entry(const std::string& label) {
  for (auto& e : catalog2())
    if (e.label() == label) return e;
  throw std::invalid_argument("no catalog entry " + label);
}

}  // namespace eds
