#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace eds {

using Rational = boost::multiprecision::cpp_rational;

// Prime field Z/P. P must be prime for division to make sense.
template <std::uint32_t P>
class Fp {
  static_assert(P >= 2 && P < (1u << 16), "modulus out of range");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Fp() = default;
  constexpr Fp(long long v)  // NOLINT: implicit from integers like Rational
      : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % P); }
  friend constexpr Fp operator-(Fp a, Fp b) { return raw((a.v_ + P - b.v_) % P); }
  friend constexpr Fp operator*(Fp a, Fp b) { return raw((a.v_ * b.v_) % P); }
  constexpr Fp operator-() const { return raw((P - v_) % P); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend constexpr bool operator==(Fp a, Fp b) = default;
  friend constexpr auto operator<=>(Fp a, Fp b) = default;

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in prime field");
    Fp r = 1, b = *this;
    for (std::uint32_t e = P - 2; e; e >>= 1, b = b * b)
      if (e & 1) r = r * b;
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  static constexpr Fp raw(std::uint32_t v) {
    Fp r;
    r.v_ = v;
    return r;
  }
  std::uint32_t v_ = 0;
};

template <class S>
bool is_zero(const S& s) {
  return s == S(0);
}

inline std::string to_string(const Rational& r) { return r.str(); }

template <std::uint32_t P>
std::string to_string(Fp<P> a) {
  return std::to_string(a.value());
}

// Accepts "n", "-n", "n/d".
inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
}

}  // namespace eds
