#pragma once

#include "eds/scalar.hpp"

#include <map>
#include <utility>

namespace eds {

// Finite formal linear combination; zero coefficients are never stored.
template <class K, class S = Rational>
class LinComb {
 public:
  using key_type = K;
  using scalar_type = S;
  using map_type = std::map<K, S>;

  LinComb() = default;
  explicit LinComb(K k, S c = S(1)) { add(std::move(k), std::move(c)); }

  void add(const K& k, const S& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const S& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const S& s, LinComb a) { return a *= s; }

  S coefficient(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? S(0) : it->second;
  }

  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  map_type terms_;
};

// Applies a bilinear map given on basis pairs.
template <class Out, class A, class B, class F>
Out bilinear(const A& x, const B& y, F&& on_basis) {
  Out out;
  for (auto& [kx, cx] : x)
    for (auto& [ky, cy] : y) {
      auto c = cx * cy;
      for (auto& [k, ck] : on_basis(kx, ky)) out.add(k, c * typename Out::scalar_type(ck));
    }
  return out;
}

}  // namespace eds
