#pragma once

#include "eds/eds.hpp"
#include "eds/lincomb.hpp"
#include "eds/shuffle.hpp"
#include "eds/tree.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace eds {

using Letter = std::uint32_t;

// alpha_2 ... alpha_n ⊗ v_1 ... v_n, with types[i] sitting between letters[i] and letters[i+1].
struct TypedWord {
  std::vector<Letter> letters;
  std::vector<Symbol> types;

  TypedWord() = default;
  TypedWord(std::vector<Letter> l, std::vector<Symbol> t) : letters(std::move(l)), types(std::move(t)) {
    if (letters.empty()) throw std::invalid_argument("typed word must be nonempty");
    if (types.size() + 1 != letters.size()) throw std::invalid_argument("typed word needs one type between letters");
  }
  static TypedWord letter(Letter v) { return TypedWord({v}, {}); }

  std::size_t length() const { return letters.size(); }

  // Drops the first letter; requires length >= 2.
  TypedWord tail() const {
    return TypedWord(std::vector<Letter>(letters.begin() + 1, letters.end()),
                     std::vector<Symbol>(types.begin() + 1, types.end()));
  }

  friend bool operator==(const TypedWord&, const TypedWord&) = default;
  friend auto operator<=>(const TypedWord&, const TypedWord&) = default;
};

// (a ⊗ v) · w: prepend v with type a in front of w.
inline TypedWord prepend(Symbol a, Letter v, const TypedWord& w) {
  TypedWord out;
  out.letters.reserve(w.length() + 1);
  out.letters.push_back(v);
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  out.types.push_back(a);
  out.types.insert(out.types.end(), w.types.begin(), w.types.end());
  return out;
}

template <class S = Rational>
using WordPoly = LinComb<TypedWord, S>;

using IntWordPoly = LinComb<TypedWord, long long>;

// Which arrow accompanies which half-product in the recursion on the first letter.
// `tree` pairs <- with ≺ (and <|), as in the tree recursion; `swapped` exchanges them.
enum class WordPairing { tree, swapped };

namespace detail {

inline IntWordPoly prepend_all(Symbol a, Letter v, const IntWordPoly& p) {
  IntWordPoly out;
  for (auto& [w, c] : p) out.add(prepend(a, v, w), c);
  return out;
}

inline IntWordPoly word_product(const FiniteEds& e, Side side, Symbol a, const TypedWord& x, const TypedWord& y,
                                WordPairing pairing) {
  const bool swap = pairing == WordPairing::swapped;
  if (side == Side::prec) {
    if (x.length() == 1) {
      TypedWord w = prepend(a, x.letters[0], y);
      return IntWordPoly(w);
    }
    const Symbol b = x.types[0];
    const Letter v = x.letters[0];
    const auto xs = x.tail();
    Symbol with_prec = swap ? e.rarrow(b, a) : e.larrow(b, a);
    Symbol with_succ = swap ? e.larrow(b, a) : e.rarrow(b, a);
    auto out = prepend_all(with_prec, v, word_product(e, Side::prec, e.ltri(b, a), xs, y, pairing));
    out += prepend_all(with_succ, v, word_product(e, Side::succ, e.rtri(b, a), xs, y, pairing));
    return out;
  }
  if (y.length() == 1) return IntWordPoly(prepend(a, y.letters[0], x));
  const Symbol b = y.types[0];
  const Letter w = y.letters[0];
  const auto ys = y.tail();
  Symbol with_succ = swap ? e.larrow(a, b) : e.rarrow(a, b);
  Symbol with_prec = swap ? e.rarrow(a, b) : e.larrow(a, b);
  auto out = prepend_all(with_succ, w, word_product(e, Side::succ, e.rtri(a, b), x, ys, pairing));
  out += prepend_all(with_prec, w, word_product(e, Side::prec, e.ltri(a, b), x, ys, pairing));
  return out;
}

}  // namespace detail

inline IntWordPoly word_product(const FiniteEds& e, Side side, Symbol a, const TypedWord& x, const TypedWord& y,
                                WordPairing pairing = WordPairing::tree) {
  detail::check_symbol(e, a);
  for (auto t : x.types) detail::check_symbol(e, t);
  for (auto t : y.types) detail::check_symbol(e, t);
  return detail::word_product(e, side, a, x, y, pairing);
}

template <class S>
WordPoly<S> word_product(const FiniteEds& e, Side side, Symbol a, const WordPoly<S>& x, const WordPoly<S>& y,
                         WordPairing pairing = WordPairing::tree) {
  return bilinear<WordPoly<S>>(
      x, y, [&](const TypedWord& s, const TypedWord& t) { return word_product(e, side, a, s, t, pairing); });
}

inline IntWordPoly word_shuffle_product(const FiniteEds& e, Side side, Symbol a, const TypedWord& x,
                                        const TypedWord& y) {
  detail::check_symbol(e, a);
  const std::size_t k = x.length(), l = y.length();
  std::vector<Symbol> types = x.types;
  types.push_back(a);
  types.insert(types.end(), y.types.begin(), y.types.end());
  IntWordPoly out;
  for (auto& sigma : shuffles(k, l)) {
    if (is_prec_shuffle(sigma, k) != (side == Side::prec)) continue;
    auto inv = inverse_permutation(sigma);
    std::vector<Letter> letters;
    for (auto j : inv) letters.push_back(j <= k ? x.letters[j - 1] : y.letters[j - k - 1]);
    out.add(TypedWord(std::move(letters), d_map(e, k, l, sigma, types)), 1);
  }
  return out;
}

// All typed words of the given length over `letters` letters and omega types.
inline std::vector<TypedWord> enumerate_words(std::size_t letters, std::size_t omega, std::size_t length) {
  std::vector<TypedWord> out;
  if (length == 0) return out;
  std::vector<Letter> ls(length, 0);
  std::vector<Symbol> ts(length - 1, 0);
  while (true) {
    out.emplace_back(ls, ts);
    std::size_t i = 0;
    // odometer over letters then types
    for (; i < length; ++i) {
      if (++ls[i] < letters) break;
      ls[i] = 0;
    }
    if (i < length) continue;
    std::size_t j = 0;
    for (; j + 1 < length; ++j) {
      if (++ts[j] < omega) break;
      ts[j] = 0;
    }
    if (j + 1 >= length) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eds
