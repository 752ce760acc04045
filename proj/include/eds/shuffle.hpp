#pragma once

#include "eds/eds.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace eds {

// Permutations in one-line notation with 1-based values: sigma[i-1] = sigma(i).
using Permutation = std::vector<std::size_t>;

// (k,l)-shuffles, i.e. permutations increasing on 1..k and on k+1..k+l, in lexicographic order.
inline std::vector<Permutation> shuffles(std::size_t k, std::size_t l) {
  std::vector<Permutation> out;
  const std::size_t n = k + l;
  // pick[p]: position p+1 is the image of one of 1..k
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Permutation sigma;
    for (std::size_t p = 0; p < n; ++p)
      if (pick[p]) sigma.push_back(p + 1);
    for (std::size_t p = 0; p < n; ++p)
      if (!pick[p]) sigma.push_back(p + 1);
    out.push_back(std::move(sigma));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_shuffle(const Permutation& sigma, std::size_t k, std::size_t l) {
  if (sigma.size() != k + l) return false;
  std::vector<bool> seen(k + l + 1, false);
  for (auto v : sigma) {
    if (v < 1 || v > k + l || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 1; i < k; ++i)
    if (sigma[i - 1] > sigma[i]) return false;
  for (std::size_t i = k + 1; i < k + l; ++i)
    if (sigma[i - 1] > sigma[i]) return false;
  return true;
}

// sigma in sh_≺(k,l) <=> sigma^{-1}(1) <= k.
inline bool is_prec_shuffle(const Permutation& sigma, std::size_t k) { return k >= 1 && sigma[0] == 1; }

inline Permutation inverse_permutation(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i] - 1] = i + 1;
  return inv;
}

// Decoration transport D^{k,l}_sigma on (alpha_2, ..., alpha_{k+l}).
inline std::vector<Symbol> d_map(const FiniteEds& e, std::size_t k, std::size_t l, const Permutation& sigma,
                                 const std::vector<Symbol>& types) {
  if (!is_shuffle(sigma, k, l)) throw std::invalid_argument("d_map: not a shuffle");
  if (k + l == 0 || types.size() != k + l - 1) throw std::invalid_argument("d_map: wrong number of types");
  if (k == 0 || l == 0) return types;

  std::vector<Symbol> out;
  if (is_prec_shuffle(sigma, k)) {
    if (k == 1) return types;
    Permutation sub(sigma.begin() + 1, sigma.end());
    for (auto& v : sub) --v;
    const Symbol a2 = types[0], ak1 = types[k - 1];
    const bool sub_prec = is_prec_shuffle(sub, k - 1);
    std::vector<Symbol> args(types.begin() + 1, types.begin() + static_cast<long>(k) - 1);
    args.push_back(sub_prec ? e.ltri(a2, ak1) : e.rtri(a2, ak1));
    args.insert(args.end(), types.begin() + static_cast<long>(k), types.end());
    out.push_back(sub_prec ? e.larrow(a2, ak1) : e.rarrow(a2, ak1));
    auto rest = d_map(e, k - 1, l, sub, args);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  const Symbol ak1 = types[k - 1];
  if (l == 1) {
    out.push_back(ak1);
    out.insert(out.end(), types.begin(), types.begin() + static_cast<long>(k) - 1);
    return out;
  }
  Permutation sub;
  for (std::size_t i = 0; i < k; ++i) sub.push_back(sigma[i] - 1);
  for (std::size_t i = k + 1; i < k + l; ++i) sub.push_back(sigma[i] - 1);
  const Symbol ak2 = types[k];
  const bool sub_prec = is_prec_shuffle(sub, k);
  std::vector<Symbol> args(types.begin(), types.begin() + static_cast<long>(k) - 1);
  args.push_back(sub_prec ? e.ltri(ak1, ak2) : e.rtri(ak1, ak2));
  args.insert(args.end(), types.begin() + static_cast<long>(k) + 1, types.end());
  out.push_back(sub_prec ? e.larrow(ak1, ak2) : e.rarrow(ak1, ak2));
  auto rest = d_map(e, k, l - 1, sub, args);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace eds
