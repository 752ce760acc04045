#pragma once

#include "eds/eds.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace eds {

struct EnumFilter {
  bool diassociative_only = false;
  bool nondegenerate_only = false;
  bool commutative_only = false;
  bool up_to_iso = false;
};

struct EnumResult {
  std::vector<FiniteEds> items;          // canonical-form ascending
  std::vector<std::size_t> class_sizes;  // parallel to items when up_to_iso
  std::size_t total = 0;                 // structures before iso reduction
  std::size_t classes = 0;
};

namespace detail {

inline constexpr Symbol kUnset = 0xFF;

// Tables under construction; kUnset marks cells not yet chosen.
struct PartialTables {
  std::size_t n;
  std::array<std::vector<Symbol>, 4> t;

  explicit PartialTables(std::size_t size) : n(size) {
    for (auto& v : t) v.assign(n * n, kUnset);
  }
  Symbol get(int op, Symbol a, Symbol b) const {
    if (a == kUnset || b == kUnset) return kUnset;
    return t[op][a * n + b];
  }
};

inline bool agree(Symbol x, Symbol y) { return x == kUnset || y == kUnset || x == y; }

// Checks every instance of the diassociativity axioms whose value is already determined.
inline bool diassociative_consistent(const PartialTables& p) {
  const auto n = static_cast<Symbol>(p.n);
  auto L = [&](Symbol x, Symbol y) { return p.get(0, x, y); };
  auto R = [&](Symbol x, Symbol y) { return p.get(1, x, y); };
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b)
      for (Symbol c = 0; c < n; ++c) {
        Symbol m = L(a, L(b, c));
        if (!agree(L(L(a, b), c), m) || !agree(m, L(a, R(b, c)))) return false;
        if (!agree(L(R(a, b), c), R(a, L(b, c)))) return false;
        Symbol k = R(a, R(b, c));
        if (!agree(R(R(a, b), c), k) || !agree(R(L(a, b), c), k)) return false;
      }
  return true;
}

// The remaining axioms, once <- and -> are complete.
inline bool extension_consistent(const PartialTables& p) {
  const auto n = static_cast<Symbol>(p.n);
  auto L = [&](Symbol x, Symbol y) { return p.get(0, x, y); };
  auto R = [&](Symbol x, Symbol y) { return p.get(1, x, y); };
  auto l = [&](Symbol x, Symbol y) { return p.get(2, x, y); };
  auto t = [&](Symbol x, Symbol y) { return p.get(3, x, y); };
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b)
      for (Symbol c = 0; c < n; ++c) {
        if (!agree(t(a, L(b, c)), t(a, b)) || !agree(l(R(a, b), c), l(b, c))) return false;
        Symbol x = l(a, b), y = l(L(a, b), c);
        if (x != kUnset && y != kUnset) {
          if (!agree(L(x, y), l(a, L(b, c))) || !agree(l(x, y), l(b, c)) || !agree(R(x, y), l(a, R(b, c))) ||
              !agree(t(x, y), t(b, c)))
            return false;
        }
        Symbol u = t(a, R(b, c)), v = t(b, c);
        if (u != kUnset && v != kUnset) {
          if (!agree(L(u, v), t(L(a, b), c)) || !agree(l(u, v), l(a, b)) || !agree(R(u, v), t(R(a, b), c)) ||
              !agree(t(u, v), t(a, b)))
            return false;
        }
      }
  return true;
}

// Partial injectivity of phi_<- and phi_-> on the assigned cells.
inline bool injective_so_far(const PartialTables& p) {
  const std::size_t nn = p.n * p.n;
  std::vector<bool> seenL(nn, false), seenR(nn, false);
  for (std::size_t i = 0; i < nn; ++i) {
    if (p.t[2][i] != kUnset) {
      std::size_t k = p.t[0][i] * p.n + p.t[2][i];
      if (seenL[k]) return false;
      seenL[k] = true;
    }
    if (p.t[3][i] != kUnset) {
      std::size_t k = p.t[1][i] * p.n + p.t[3][i];
      if (seenR[k]) return false;
      seenR[k] = true;
    }
  }
  return true;
}

inline FiniteEds to_eds(const PartialTables& p) {
  return FiniteEds(OpTable(p.n, p.t[0]), OpTable(p.n, p.t[1]), OpTable(p.n, p.t[2]), OpTable(p.n, p.t[3]));
}

// Cells of the two tables `ops` are filled alternately in row-major order.
template <class Check, class Emit>
void backtrack(PartialTables& p, int op0, std::size_t pos, const Check& check, const Emit& emit) {
  const std::size_t nn = p.n * p.n;
  if (pos == 2 * nn) {
    emit(p);
    return;
  }
  int op = op0 + static_cast<int>(pos % 2);
  std::size_t cell = pos / 2;
  for (Symbol v = 0; v < p.n; ++v) {
    p.t[op][cell] = v;
    if (check(p)) backtrack(p, op0, pos + 1, check, emit);
  }
  p.t[op][cell] = kUnset;
}

}  // namespace detail

// All diassociative pairs (<-, ->) on n points, as tables.
inline std::vector<std::pair<OpTable, OpTable>> enumerate_diassociative(std::size_t n) {
  std::vector<std::pair<OpTable, OpTable>> out;
  detail::PartialTables p(n);
  detail::backtrack(p, 0, 0, detail::diassociative_consistent, [&](const detail::PartialTables& q) {
    out.emplace_back(OpTable(n, q.t[0]), OpTable(n, q.t[1]));
  });
  return out;
}

inline std::vector<std::pair<FiniteEds, std::size_t>> reduce_up_to_iso(const std::vector<FiniteEds>& items) {
  if (items.empty()) return {};
  std::map<std::vector<Symbol>, std::size_t> classes;
  const auto n = items.front().size();
  for (auto& e : items) {
    if (e.size() != n) throw std::invalid_argument("reduce_up_to_iso: mixed carrier sizes");
    ++classes[canonical_form(e)];
  }
  std::vector<std::pair<FiniteEds, std::size_t>> out;
  const std::size_t nn = n * n;
  for (auto& [form, count] : classes) {
    auto part = [&](int i) {
      return OpTable(n, std::vector<Symbol>(form.begin() + i * nn, form.begin() + (i + 1) * nn));
    };
    out.emplace_back(FiniteEds(part(0), part(1), part(2), part(3)), count);
  }
  return out;
}

inline EnumResult enumerate_eds(std::size_t n, const EnumFilter& filter, unsigned jobs = 0) {
  if (n == 0 || n > 4) throw std::invalid_argument("enumerate_eds: n must be in 1..4");
  if (n == 4 && !filter.nondegenerate_only)
    throw std::invalid_argument("enumerate_eds: n = 4 requires nondegenerate_only");

  const auto pairs = enumerate_diassociative(n);
  std::vector<FiniteEds> found;

  if (filter.diassociative_only) {
    for (auto& [l, r] : pairs) found.push_back(eds_from_diassociative(l, r));
  } else {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, pairs.size())));
    std::vector<std::vector<FiniteEds>> per_worker(jobs);
    auto work = [&](unsigned w) {
      auto check = [&](const detail::PartialTables& p) {
        if (filter.nondegenerate_only && !detail::injective_so_far(p)) return false;
        return detail::extension_consistent(p);
      };
      for (std::size_t i = w; i < pairs.size(); i += jobs) {
        detail::PartialTables p(n);
        p.t[0] = pairs[i].first.cells();
        p.t[1] = pairs[i].second.cells();
        detail::backtrack(p, 2, 0, check,
                          [&](const detail::PartialTables& q) { per_worker[w].push_back(detail::to_eds(q)); });
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
    for (auto& v : per_worker) found.insert(found.end(), v.begin(), v.end());
  }

  std::erase_if(found, [&](const FiniteEds& e) {
    if (filter.commutative_only && !is_commutative(e)) return true;
    if (filter.nondegenerate_only && !nondegeneracy(e).nondegenerate()) return true;
    return false;
  });

  EnumResult res;
  res.total = found.size();
  auto reduced = reduce_up_to_iso(found);
  res.classes = reduced.size();
  if (filter.up_to_iso) {
    for (auto& [rep, count] : reduced) {
      res.items.push_back(rep);
      res.class_sizes.push_back(count);
    }
  } else {
    std::vector<std::pair<std::pair<std::vector<Symbol>, std::vector<Symbol>>, std::size_t>> keyed;
    for (std::size_t i = 0; i < found.size(); ++i) keyed.push_back({{canonical_form(found[i]), found[i].flat()}, i});
    std::sort(keyed.begin(), keyed.end());
    for (auto& k : keyed) res.items.push_back(found[k.second]);
  }
  return res;
}

}  // namespace eds
