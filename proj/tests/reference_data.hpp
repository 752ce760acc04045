#pragma once

// Hand-entered reference values for the 24 two-element EDS.

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace refdata {

inline const std::map<std::string, std::size_t>& coranks() {
  static const std::map<std::string, std::size_t> m{
      {"A1", 3}, {"A2", 1}, {"B1", 2}, {"B2", 0}, {"C1", 2}, {"C2", 2}, {"C3", 0}, {"C4", 2},
      {"C5", 2}, {"D1", 2}, {"D2", 0}, {"E1", 2}, {"E2", 2}, {"E3", 0}, {"F1", 1}, {"F2", 1},
      {"F3", 0}, {"F4", 0}, {"F5", 0}, {"G1", 2}, {"G2", 2}, {"G3", 0}, {"H1", 2}, {"H2", 0}};
  return m;
}

// Coefficients (≺_a, ≺_b, ≻_a, ≻_b).
using Coeffs = std::array<int, 4>;

// Each entry is a union of subspaces; each subspace is given by spanning vectors.
using Subspace = std::vector<Coeffs>;

inline const std::map<std::string, std::vector<Subspace>>& associative_products() {
  const Coeffs pa_sa{1, 0, 1, 0}, pa_sb{1, 0, 0, 1}, pb_sa{0, 1, 1, 0}, pb_sb{0, 1, 0, 1};
  const Coeffs all{1, 1, 1, 1}, sa_m_sb{0, 0, 1, -1}, pa_m_pb{1, -1, 0, 0};
  static const std::map<std::string, std::vector<Subspace>> m{
      {"A1", {{pa_sa}}},
      {"A2", {{pa_sa}}},
      {"B1", {{pa_sa}}},
      {"B2", {{pa_sa}, {sa_m_sb}}},
      {"C1", {{pa_sa}}},
      {"C2", {{pa_sb}}},
      {"C3", {{pa_sa}, {pb_sb}}},
      {"C4", {{pb_sa}}},
      {"C5", {{pb_sb}}},
      {"D1", {{pa_sa}}},
      {"D2", {{pa_sa}, {pa_m_pb}}},
      {"E1", {{pa_sa}}},
      {"E2", {{pa_sb}}},
      {"E3", {{pa_sa}, {pb_sb}, {pa_m_pb}}},
      {"F1", {{pa_sa}}},
      {"F2", {{pa_sb}}},
      {"F3", {{pa_sa, pb_sb}}},
      {"F4", {{pa_sa}, {all}}},
      {"F5", {{pa_sb}, {all}}},
      {"G1", {{pa_sa}}},
      {"G2", {{pa_sb}}},
      {"G3", {{pa_sa}, {pb_sb}, {sa_m_sb}}},
      {"H1", {{pa_sa}}},
      {"H2", {{pa_sa}, {all}}},
  };
  return m;
}

// All F_p points of a union of subspaces, reduced into [0, p).
inline std::set<Coeffs> points_mod(const std::vector<Subspace>& entry, int p) {
  std::set<Coeffs> out;
  for (auto& sub : entry) {
    std::vector<int> lambda(sub.size(), 0);
    for (;;) {
      Coeffs v{};
      for (std::size_t i = 0; i < sub.size(); ++i)
        for (int k = 0; k < 4; ++k) v[k] += lambda[i] * sub[i][k];
      for (auto& x : v) x = ((x % p) + p) % p;
      out.insert(v);
      std::size_t i = 0;
      while (i < lambda.size() && ++lambda[i] == p) lambda[i++] = 0;
      if (i == lambda.size()) break;
    }
  }
  return out;
}

}  // namespace refdata
