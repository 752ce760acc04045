#pragma once

#include "eds/bialgebra.hpp"
#include "eds/eds.hpp"
#include "eds/operad.hpp"
#include "eds/tree.hpp"
#include "eds/word.hpp"

#include <cctype>
#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eds {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : std::invalid_argument("line " + std::to_string(line) + " col " + std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_, col_;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

inline std::vector<Token> split_ws(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

inline bool parse_uint(const std::string& s, std::size_t& v) {
  if (s.empty() || s.size() > 6) return false;
  v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return true;
}

}  // namespace detail

// eds <n> [label]
// left
// <n rows>
// right / tri_left / tri_right likewise. Blank lines and '#' comments are ignored.
inline FiniteEds parse_eds(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    if (!detail::split_ws(raw).empty()) lines.emplace_back(no, raw);
  }
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'eds <n> [label]'");
  std::size_t k = 0;
  auto [hline, htext] = lines[k++];
  auto head = detail::split_ws(htext);
  if (head[0].text != "eds") throw ParseError(hline, head[0].col, "expected 'eds'");
  std::size_t n = 0;
  if (head.size() < 2 || !detail::parse_uint(head[1].text, n) || n == 0 || n > kMaxCarrier)
    throw ParseError(hline, head.size() < 2 ? htext.size() + 1 : head[1].col,
                     "expected a size between 1 and " + std::to_string(kMaxCarrier));
  std::string label;
  for (std::size_t i = 2; i < head.size(); ++i) label += (i > 2 ? " " : "") + head[i].text;

  const char* names[4] = {"left", "right", "tri_left", "tri_right"};
  std::vector<OpTable> tables;
  for (auto* name : names) {
    if (k >= lines.size()) throw ParseError(lines.back().first + 1, 1, std::string("missing block '") + name + "'");
    auto [bl, bt] = lines[k++];
    auto bh = detail::split_ws(bt);
    if (bh.size() != 1 || bh[0].text != name)
      throw ParseError(bl, bh[0].col, std::string("expected block header '") + name + "'");
    std::vector<Symbol> cells;
    for (std::size_t r = 0; r < n; ++r) {
      if (k >= lines.size()) throw ParseError(bl + r + 1, 1, std::string("block '") + name + "' has too few rows");
      auto [rl, rt] = lines[k++];
      auto row = detail::split_ws(rt);
      if (row.size() != n)
        throw ParseError(rl, row.size() > n ? row[n].col : rt.size() + 1,
                         "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
      for (auto& tok : row) {
        std::size_t v = 0;
        if (!detail::parse_uint(tok.text, v) || v >= n)
          throw ParseError(rl, tok.col, "entry '" + tok.text + "' is not in [0," + std::to_string(n) + ")");
        cells.push_back(static_cast<Symbol>(v));
      }
    }
    tables.emplace_back(n, std::move(cells));
  }
  if (k < lines.size()) throw ParseError(lines[k].first, 1, "trailing content after the last block");
  return FiniteEds(tables[0], tables[1], tables[2], tables[3], label);
}

inline FiniteEds parse_eds(const std::string& text) {
  std::istringstream in(text);
  return parse_eds(in);
}

inline std::string format_eds(const FiniteEds& e) {
  std::ostringstream os;
  os << "eds " << e.size();
  if (!e.label().empty()) os << ' ' << e.label();
  os << '\n';
  const char* names[4] = {"left", "right", "tri_left", "tri_right"};
  for (int t = 0; t < 4; ++t) {
    os << names[t] << '\n';
    const auto& tab = e.table(static_cast<Op>(t));
    for (Symbol a = 0; a < e.size(); ++a) {
      for (Symbol b = 0; b < e.size(); ++b) os << (b ? " " : "") << int(tab(a, b));
      os << '\n';
    }
  }
  return os.str();
}

namespace detail {

class TreeLexer {
 public:
  explicit TreeLexer(const std::string& s) : s_(s) {}

  TypedTree tree() {
    skip();
    if (at('.')) {
      ++i_;
      return TypedTree::leaf();
    }
    expect('(');
    auto l = tree();
    skip();
    const std::size_t lpos = i_;
    auto lt = type();
    skip();
    const std::size_t rpos = i_;
    auto rt = type();
    auto r = tree();
    skip();
    expect(')');
    if (lt.has_value() == l.is_leaf())
      fail_at(lpos, lt ? "left type given for a leaf child" : "left child needs a type");
    if (rt.has_value() == r.is_leaf())
      fail_at(rpos, rt ? "right type given for a leaf child" : "right child needs a type");
    return TypedTree::graft_unchecked(l, lt, rt, r);
  }

  void finish() {
    skip();
    if (i_ < s_.size()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(i_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(1, pos + 1, msg); }

 private:
  OptSymbol type() {
    skip();
    if (at('-')) {
      ++i_;
      return std::nullopt;
    }
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    std::size_t v = 0;
    if (!parse_uint(s_.substr(i_, j - i_), v) || v >= kMaxCarrier) fail("expected a type symbol or '-'");
    i_ = j;
    return static_cast<Symbol>(v);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at(char c) const { return i_ < s_.size() && s_[i_] == c; }
  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline TypedTree parse_tree(const std::string& s) {
  detail::TreeLexer lx(s);
  auto t = lx.tree();
  lx.finish();
  return t;
}

// Parses and checks every type against the EDS carrier.
inline TypedTree parse_tree(const std::string& s, const FiniteEds& e) {
  auto t = parse_tree(s);
  std::function<void(const TypedTree&)> walk = [&](const TypedTree& u) {
    if (u.is_leaf()) return;
    for (auto ty : {u.left_type(), u.right_type()})
      if (ty && *ty >= e.size())
        throw ParseError(1, 1, "type " + std::to_string(*ty) + " is not in [0," + std::to_string(e.size()) + ")");
    walk(u.left());
    walk(u.right());
  };
  walk(t);
  return t;
}

inline std::string format_tree(const TypedTree& t) {
  if (t.is_leaf()) return ".";
  auto ty = [](OptSymbol s) { return s ? std::to_string(*s) : std::string("-"); };
  return "(" + format_tree(t.left()) + " " + ty(t.left_type()) + " " + ty(t.right_type()) + " " +
         format_tree(t.right()) + ")";
}

// Letter names are interned in order of first appearance.
class LetterTable {
 public:
  Letter intern(const std::string& name) {
    auto [it, fresh] = ids_.try_emplace(name, static_cast<Letter>(names_.size()));
    if (fresh) names_.push_back(name);
    return it->second;
  }
  const std::string& name(Letter l) const {
    if (l >= names_.size()) throw std::out_of_range("unknown letter id");
    return names_[l];
  }
  std::size_t size() const { return names_.size(); }

 private:
  std::map<std::string, Letter> ids_;
  std::vector<std::string> names_;
};

inline TypedWord parse_word(const std::string& s, LetterTable& letters, std::size_t omega = kMaxCarrier) {
  auto toks = detail::split_ws(s);
  if (toks.empty()) throw ParseError(1, 1, "empty word");
  if (toks.size() % 2 == 0) throw ParseError(1, toks.back().col, "a word must end with a letter");
  std::vector<Letter> ls;
  std::vector<Symbol> ts;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i % 2 == 0) {
      if (std::isdigit(static_cast<unsigned char>(toks[i].text[0])))
        throw ParseError(1, toks[i].col, "letters must not start with a digit");
      ls.push_back(letters.intern(toks[i].text));
    } else {
      std::size_t v = 0;
      if (!detail::parse_uint(toks[i].text, v) || v >= omega)
        throw ParseError(1, toks[i].col, "expected a type symbol, found '" + toks[i].text + "'");
      ts.push_back(static_cast<Symbol>(v));
    }
  }
  return TypedWord(std::move(ls), std::move(ts));
}

inline std::string format_word(const TypedWord& w, const LetterTable& letters) {
  std::string out = letters.name(w.letters[0]);
  for (std::size_t i = 1; i < w.length(); ++i) out += " " + std::to_string(w.types[i - 1]) + " " + letters.name(w.letters[i]);
  return out;
}

// prec:<sym>=<coef>,succ:<sym>=<coef>,...
inline Arity2Element<Rational> parse_arity2(const std::string& s, std::size_t omega = kMaxCarrier) {
  Arity2Element<Rational> m;
  std::size_t pos = 0;
  auto trimmed = [](std::string x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
    std::size_t i = 0;
    while (i < x.size() && std::isspace(static_cast<unsigned char>(x[i]))) ++i;
    return x.substr(i);
  };
  if (trimmed(s) == "0") return m;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string item = trimmed(s.substr(pos, comma - pos));
    const std::size_t col = pos + 1;
    auto colon = item.find(':'), eq = item.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
      throw ParseError(1, col, "expected 'prec:<sym>=<coef>' or 'succ:<sym>=<coef>'");
    auto side_name = item.substr(0, colon);
    Side side;
    if (side_name == "prec") side = Side::prec;
    else if (side_name == "succ") side = Side::succ;
    else throw ParseError(1, col, "unknown side '" + side_name + "'");
    std::size_t sym = 0;
    if (!detail::parse_uint(item.substr(colon + 1, eq - colon - 1), sym) || sym >= omega)
      throw ParseError(1, col + colon + 1, "bad type symbol");
    Rational c;
    try {
      c = parse_rational(item.substr(eq + 1));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(1, col + eq + 1, ex.what());
    }
    m.set(side, static_cast<Symbol>(sym), m.coefficient(side, static_cast<Symbol>(sym)) + c);
    pos = comma + 1;
  }
  return m;
}

template <std::uint32_t P>
Fp<P> reduce_mod(const Rational& r) {
  auto n = numerator(r) % P, d = denominator(r) % P;
  if (d == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(P));
  return Fp<P>(static_cast<long long>(n)) / Fp<P>(static_cast<long long>(d));
}

template <std::uint32_t P>
Arity2Element<Fp<P>> reduce_mod(const Arity2Element<Rational>& m) {
  Arity2Element<Fp<P>> out;
  for (auto& [g, c] : m.coefficients()) out.set(g.side, g.type, reduce_mod<P>(c));
  return out;
}

template <class S>
std::string format_arity2(const Arity2Element<S>& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (auto& [g, c] : m.coefficients()) {
    if (!out.empty()) out += ",";
    out += (g.side == Side::prec ? "prec:" : "succ:") + std::to_string(g.type) + "=" + to_string(c);
  }
  return out;
}

inline std::string to_string(long long v) { return std::to_string(v); }

// One term per line: "coef · key"; "0" for the zero combination.
template <class K, class S, class F>
std::string format_lincomb(const LinComb<K, S>& p, F&& key) {
  if (p.empty()) return "0\n";
  std::string out;
  for (auto& [k, c] : p) out += to_string(c) + " · " + key(k) + "\n";
  return out;
}

template <class S>
std::string format_tree_poly(const LinComb<TypedTree, S>& p) {
  return format_lincomb(p, [](const TypedTree& t) { return format_tree(t); });
}

template <class S>
std::string format_word_poly(const LinComb<TypedWord, S>& p, const LetterTable& letters) {
  return format_lincomb(p, [&](const TypedWord& w) { return format_word(w, letters); });
}

inline std::string format_decorated(const Decorated<TypedTree>& d) {
  return "(" + std::to_string(d.first) + " ⊗ " + format_tree(d.second) + ")";
}
inline std::string format_decorated(const Decorated<TypedWord>& d, const LetterTable& letters) {
  return "(" + std::to_string(d.first) + " ⊗ " + format_word(d.second, letters) + ")";
}

template <class S>
std::string format_tensor(const TensorPoly<TypedTree, S>& p) {
  return format_lincomb(p, [](const auto& k) { return format_decorated(k.first) + " ⊗ " + format_decorated(k.second); });
}

template <class S>
std::string format_tensor(const TensorPoly<TypedWord, S>& p, const LetterTable& letters) {
  return format_lincomb(p, [&](const auto& k) {
    return format_decorated(k.first, letters) + " ⊗ " + format_decorated(k.second, letters);
  });
}

// (eds, tree, alpha, recursive_term, cuts_term)
inline std::string format_discrepancy(const std::string& eds, const CoproductDiscrepancy& d) {
  auto term = [&](long long c) {
    return std::to_string(c) + " · " + format_decorated(d.term.first) + " ⊗ " + format_decorated(d.term.second);
  };
  return "(" + eds + ", " + format_tree(d.tree) + ", " + std::to_string(d.alpha) + ", " + term(d.recursive_coef) +
         ", " + term(d.cuts_coef) + ")";
}

}  // namespace eds
