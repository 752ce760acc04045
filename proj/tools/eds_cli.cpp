// Command-line front end. Exit status: 0 ok, 1 mathematical failure, 2 usage or parse error.
#include "eds/bialgebra.hpp"
#include "eds/dendriform.hpp"
#include "eds/eds.hpp"
#include "eds/enumeration.hpp"
#include "eds/io.hpp"
#include "eds/operad.hpp"
#include "eds/tree.hpp"
#include "eds/word.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace eds;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A path, or catalog:<label> for one of the 24 representatives on {a,b}.
FiniteEds load_eds(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) return catalog_entry(spec.substr(8));
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot open '" + spec + "'");
  try {
    return parse_eds(in);
  } catch (const ParseError& e) {
    throw UsageError(spec + ": " + e.what());
  }
}

Side parse_side(const std::string& s) {
  if (s == "prec") return Side::prec;
  if (s == "succ") return Side::succ;
  throw UsageError("side must be prec or succ");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class F>
int with_prime(unsigned p, F&& f) {
  switch (p) {
    case 2: return f(std::integral_constant<std::uint32_t, 2>{});
    case 3: return f(std::integral_constant<std::uint32_t, 3>{});
    case 5: return f(std::integral_constant<std::uint32_t, 5>{});
    case 7: return f(std::integral_constant<std::uint32_t, 7>{});
    case 11: return f(std::integral_constant<std::uint32_t, 11>{});
    case 13: return f(std::integral_constant<std::uint32_t, 13>{});
    default: throw UsageError("--mod must be one of 2, 3, 5, 7, 11, 13");
  }
}

std::string witness_text(const OperadWitness& w) {
  if (w.tree) return "relation=" + std::to_string(w.family) + " tree=" + format_tree(*w.tree);
  return "family=" + std::to_string(w.family) + " alpha=" + std::to_string(w.alpha) +
         " beta=" + std::to_string(w.beta);
}

int cmd_check(const std::string& file) {
  auto e = load_eds(file);
  auto pw = check_eds(e, CheckMode::pointwise);
  auto mf = check_eds(e, CheckMode::map_form);
  if (!pw.passed() || !mf.passed()) {
    std::cout << "FAIL\n";
    for (auto& v : pw.violations)
      std::cout << "axiom=" << v.axiom << " witness=" << triple_str(v.witness) << " lhs=" << int(v.lhs)
                << " rhs=" << int(v.rhs) << "\n";
    for (auto& v : mf.violations) std::cout << "map-form=" << v.axiom << " witness=" << triple_str(v.witness) << "\n";
    return 1;
  }
  auto nd = nondegeneracy(e);
  std::cout << "OK " << (nd.nondegenerate() ? "nondegenerate" : "degenerate") << " corank=" << nd.corank << "\n";
  return 0;
}

int cmd_catalog(std::size_t size) {
  if (size != 2) throw UsageError("the catalog is only available for --size 2");
  auto c = catalog2();
  std::cout << "total=" << c.size() << "\n";
  for (auto& e : c) std::cout << "\n" << format_eds(e);
  return 0;
}

int cmd_enumerate(std::size_t size, const EnumFilter& f, bool quiet, unsigned jobs) {
  auto r = enumerate_eds(size, f, jobs);
  std::cout << "total=" << r.total << " classes=" << r.classes << "\n";
  if (quiet) return 0;
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    std::cout << "\n";
    if (f.up_to_iso) std::cout << "# class_size=" << r.class_sizes[i] << "\n";
    std::cout << format_eds(r.items[i]);
  }
  return 0;
}

int cmd_iso(const std::string& a, const std::string& b) {
  auto sigma = are_isomorphic(load_eds(a), load_eds(b));
  if (!sigma) {
    std::cout << "isomorphic=no\n";
    return 0;
  }
  std::cout << "isomorphic=yes sigma=";
  for (std::size_t i = 0; i < sigma->size(); ++i) std::cout << (i ? "," : "") << int((*sigma)[i]);
  std::cout << "\n";
  return 0;
}

int cmd_mul(const std::string& file, const std::string& side_s, unsigned type, const std::string& algebra,
            const std::string& method, const std::string& x, const std::string& y) {
  auto e = load_eds(file);
  if (type >= e.size()) throw UsageError("--type is out of range");
  const auto side = parse_side(side_s);
  const auto a = static_cast<Symbol>(type);
  if (algebra == "trees") {
    auto s = parse_tree(x, e), t = parse_tree(y, e);
    if (s.is_leaf() || t.is_leaf()) throw UsageError("products need nonempty trees");
    auto p = method == "shuffle" ? shuffle_product_trees(e, side, a, s, t) : typed_product(e, side, a, s, t);
    std::cout << "terms=" << p.size() << "\n" << format_tree_poly(p);
    return 0;
  }
  LetterTable letters;
  auto s = parse_word(x, letters, e.size()), t = parse_word(y, letters, e.size());
  auto p = method == "shuffle" ? word_shuffle_product(e, side, a, s, t) : word_product(e, side, a, s, t);
  std::cout << "terms=" << p.size() << "\n" << format_word_poly(p, letters);
  return 0;
}

int cmd_compose(const std::string& file, const std::string& root, const std::vector<std::string>& args) {
  auto e = load_eds(file);
  auto t = parse_tree(root, e);
  std::vector<TypedTree> ts;
  for (auto& s : args) ts.push_back(parse_tree(s, e));
  auto p = compose(e, t, ts);
  std::cout << "arity=" << (p.empty() ? 0 : p.begin()->first.vertices()) << " terms=" << p.size() << "\n"
            << format_tree_poly(p);
  return 0;
}

int cmd_assoc_verify(const std::string& file, const std::string& lit, unsigned mod, const std::string& succ_lit) {
  auto e = load_eds(file);
  auto m = parse_arity2(lit, e.size());
  auto report = [](const std::string& what, const OperadCheck& eq, const OperadCheck& comp) {
    if (eq.holds != comp.holds) throw std::logic_error("equation and composition checks disagree");
    std::cout << what << "=" << yes_no(eq.holds);
    if (!eq.holds) std::cout << " " << witness_text(*eq.witness) << " " << witness_text(*comp.witness);
    std::cout << "\n";
    return eq.holds ? 0 : 1;
  };
  auto run = [&](const auto& x, const auto& s) {
    if (!succ_lit.empty())
      return report("dendriform", check_dendriform_pair(e, x, s),
                    check_dendriform_pair(e, x, s, CheckMethod::composition));
    return report("associative", check_associative(e, x), check_associative(e, x, CheckMethod::composition));
  };
  auto s = succ_lit.empty() ? Arity2Element<Rational>() : parse_arity2(succ_lit, e.size());
  if (mod == 0) return run(m, s);
  return with_prime(mod, [&](auto P) { return run(reduce_mod<decltype(P)::value>(m), reduce_mod<decltype(P)::value>(s)); });
}

int cmd_assoc_search(const std::string& file, unsigned mod, unsigned jobs) {
  auto e = load_eds(file);
  return with_prime(mod, [&](auto P) {
    auto sols = solve_associative_fp<decltype(P)::value>(e, jobs);
    std::cout << "solutions=" << sols.size() << "\n";
    for (auto& m : sols) std::cout << format_arity2(m) << "\n";
    return 0;
  });
}

int cmd_koszul(const std::string& file) {
  auto e = load_eds(file);
  auto d = koszul_dual_dim3(e);
  auto c = corank(e);
  auto expected = 3 * e.size() * e.size() + 2 * c;
  std::cout << "dim=" << d << " corank=" << c << " formula=" << expected << "\n";
  return d == expected ? 0 : 1;
}

int cmd_coproduct(const std::string& file, const std::string& algebra, const std::string& mode, unsigned type,
                  const std::string& lit) {
  auto e = load_eds(file);
  if (type >= e.size()) throw UsageError("--type is out of range");
  const auto a = static_cast<Symbol>(type);
  if (algebra == "trees") {
    if (mode != "recursive" && mode != "cuts") throw UsageError("tree coproduct modes are recursive and cuts");
    auto t = parse_tree(lit, e);
    if (t.is_leaf()) throw UsageError("the coproduct is defined on nonempty trees");
    auto d = coproduct_tree(e, mode == "cuts" ? CoproductMode::cuts : CoproductMode::recursive,
                            ExtendedElement<TypedTree, Rational>(Decorated<TypedTree>{a, t}));
    std::cout << "terms=" << d.size() << "\n" << format_tensor(d);
    return 0;
  }
  if (mode != "recursive" && mode != "deconcatenation")
    throw UsageError("word coproduct modes are recursive and deconcatenation");
  LetterTable letters;
  auto w = parse_word(lit, letters, e.size());
  auto d = coproduct_word(e, ExtendedElement<TypedWord, Rational>(Decorated<TypedWord>{a, w}),
                          mode == "recursive" ? WordCoproductMode::recursive : WordCoproductMode::deconcatenation);
  std::cout << "terms=" << d.size() << "\n" << format_tensor(d, letters);
  return 0;
}

// Conformance report for one EDS. Lines marked "info" never fail the run.
int cmd_verify_all(const std::string& file, std::size_t bound, unsigned jobs) {
  auto e = load_eds(file);
  const std::string name = e.label().empty() ? file : e.label();
  bool ok = true;
  auto line = [&](const std::string& key, bool pass, const std::string& detail = {}) {
    ok = ok && pass;
    std::cout << key << "=" << (pass ? "ok" : "FAIL") << (detail.empty() ? "" : " " + detail) << "\n";
  };
  auto info = [](const std::string& key, const std::string& detail) { std::cout << key << "=info " << detail << "\n"; };

  std::cout << "eds=" << name << " size=" << e.size() << " bound=" << bound << "\n";
  auto pw = check_eds(e, CheckMode::pointwise), mf = check_eds(e, CheckMode::map_form);
  line("axioms", pw.passed(), pw.passed() ? "" : "first=" + std::to_string(pw.violations[0].axiom));
  line("axioms-map-form", mf.passed() == pw.passed());
  if (!pw.passed()) return 1;

  auto nd = nondegeneracy(e);
  std::cout << "nondegenerate=" << yes_no(nd.nondegenerate()) << " commutative=" << yes_no(is_commutative(e))
            << " corank=" << nd.corank << "\n";
  if (nd.nondegenerate()) line("derived-identities", derived_identity_check(e).passed());

  const std::size_t w = e.size();
  std::vector<std::vector<TypedTree>> trees(bound + 1);
  for (std::size_t d = 1; d <= bound; ++d) trees[d] = enumerate_basis(w, d);
  auto tprod = [&](Side s, Symbol a, const TypedTree& x, const TypedTree& y) { return typed_product(e, s, a, x, y); };
  auto tv = dendriform_violation_graded(e, tprod, trees, bound);
  line("tree-dendriform", !tv, tv ? "axiom=" + std::to_string(tv->axiom) : "");
  bool shuffle_ok = true;
  for (std::size_t i = 1; i < bound && shuffle_ok; ++i)
    for (std::size_t j = 1; i + j <= bound && shuffle_ok; ++j)
      for (auto& x : trees[i])
        for (auto& y : trees[j])
          for (Side s : {Side::prec, Side::succ})
            for (Symbol a = 0; a < w; ++a)
              if (typed_product(e, s, a, x, y) != shuffle_product_trees(e, s, a, x, y)) shuffle_ok = false;
  line("tree-shuffle", shuffle_ok);

  std::vector<std::vector<TypedWord>> words(bound + 1);
  for (std::size_t d = 1; d <= bound; ++d) words[d] = enumerate_words(2, w, d);
  auto wprod = [&](Side s, Symbol a, const TypedWord& x, const TypedWord& y) { return word_product(e, s, a, x, y); };
  auto wv = dendriform_violation_graded(e, wprod, words, bound);
  line("word-dendriform", !wv, wv ? "axiom=" + std::to_string(wv->axiom) : "");
  bool wshuffle_ok = true;
  for (std::size_t i = 1; i < bound && wshuffle_ok; ++i)
    for (std::size_t j = 1; i + j <= bound && wshuffle_ok; ++j)
      for (auto& x : words[i])
        for (auto& y : words[j])
          for (Side s : {Side::prec, Side::succ})
            for (Symbol a = 0; a < w; ++a)
              if (word_product(e, s, a, x, y) != word_shuffle_product(e, s, a, x, y)) wshuffle_ok = false;
  line("word-shuffle", wshuffle_ok);

  bool dims_ok = true;
  for (std::size_t n = 1; n <= std::min<std::size_t>(bound, 4); ++n)
    dims_ok = dims_ok && enumerate_basis(w, n).size() == operad_dimension_formula(w, n);
  line("operad-dimensions", dims_ok);
  auto kd = koszul_dual_dim3(e);
  line("koszul-dim3", kd == 3 * w * w + 2 * nd.corank, "dim=" + std::to_string(kd));

  const std::uint64_t seed = 20240611;
  std::mt19937_64 rng(seed);
  std::size_t disagree = 0;
  for (int i = 0; i < 200; ++i) {
    Arity2Element<Fp<5>> m;
    for (Symbol a = 0; a < w; ++a)
      for (Side s : {Side::prec, Side::succ}) m.set(s, a, Fp<5>(static_cast<long long>(rng() % 5)));
    disagree += check_associative(e, m).holds != check_associative(e, m, CheckMethod::composition).holds;
  }
  line("associativity-methods", disagree == 0, "seed=" + std::to_string(seed) + " samples=200");

  if (!nd.nondegenerate()) {
    auto c = find_product_collision(e);
    if (c)
      info("coproduct-obstruction", std::string(c->side == Side::prec ? "prec" : "succ") + " (" +
                                        std::to_string(c->first.first) + "," + std::to_string(c->first.second) +
                                        ") (" + std::to_string(c->second.first) + "," +
                                        std::to_string(c->second.second) + ")");
    return ok ? 0 : 1;
  }
  const std::size_t cb = std::min<std::size_t>(bound, 4);
  auto tr = check_tree_bialgebra(e, cb, CoproductMode::recursive, jobs);
  line("tree-bialgebra", tr.passed(), tr.passed() ? "" : tr.violations[0].property);
  auto disc = coproduct_discrepancies(e, cb);
  info("tree-cuts-vs-recursive", "differing_terms=" + std::to_string(disc.size()));
  for (std::size_t i = 0; i < std::min<std::size_t>(disc.size(), 3); ++i) std::cout << format_discrepancy(name, disc[i]) << "\n";
  auto wr = check_word_bialgebra(e, cb, WordCoproductMode::recursive, 2, jobs);
  if (is_commutative(e)) {
    line("word-bialgebra", wr.passed(), wr.passed() ? "" : wr.violations[0].property);
    auto wd = check_word_bialgebra(e, cb, WordCoproductMode::deconcatenation, 2, jobs);
    info("word-deconcatenation-formula", wd.passed() ? "compatible" : "violates " + wd.violations[0].property);
  } else {
    line("word-bialgebra-obstruction", !wr.passed(), wr.passed() ? "" : wr.violations[0].property);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended diassociative semigroups and their dendriform structures"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 0;
  app.add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");

  std::string file, file2, eds_file, side = "prec", algebra = "trees", method = "recursive", mode = "recursive";
  std::string lit1, lit2, succ_lit;
  std::vector<std::string> rest;
  std::size_t size = 2, bound = 4;
  unsigned type = 0, mod = 0;
  EnumFilter filter;
  bool quiet = false;

  auto* check = app.add_subcommand("check", "Validate the axioms and report nondegeneracy");
  check->add_option("file", file)->required();

  auto* catalog = app.add_subcommand("catalog", "Print the 24 representatives on two elements");
  catalog->add_option("--size", size)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate EDS on n elements");
  enumerate->add_option("--size", size)->required()->check(CLI::Range(1, 4));
  enumerate->add_flag("--diassociative", filter.diassociative_only);
  enumerate->add_flag("--nondegenerate", filter.nondegenerate_only);
  enumerate->add_flag("--commutative", filter.commutative_only);
  enumerate->add_flag("--up-to-iso", filter.up_to_iso);
  enumerate->add_flag("--quiet", quiet, "Print only the summary line");

  auto* cor = app.add_subcommand("corank", "Corank of the joint map");
  cor->add_option("file", file)->required();

  auto* iso = app.add_subcommand("iso", "Test two EDS for isomorphism");
  iso->add_option("a", file)->required();
  iso->add_option("b", file2)->required();

  auto* mul = app.add_subcommand("mul", "Typed product of two trees or words");
  mul->add_option("--eds", eds_file)->required();
  mul->add_option("--side", side)->check(CLI::IsMember({"prec", "succ"}));
  mul->add_option("--type", type)->required();
  mul->add_option("--algebra", algebra)->check(CLI::IsMember({"trees", "words"}));
  mul->add_option("--method", method)->check(CLI::IsMember({"recursive", "shuffle"}));
  mul->add_option("x", lit1)->required();
  mul->add_option("y", lit2)->required();

  auto* comp = app.add_subcommand("compose", "Operadic composition t ∘ (args...)");
  comp->add_option("--eds", eds_file)->required();
  comp->add_option("tree", lit1)->required();
  comp->add_option("args", rest)->required();

  auto* av = app.add_subcommand("assoc-verify", "Check associativity (or a dendriform pair with --succ)");
  av->add_option("--eds", eds_file)->required();
  av->add_option("--mod", mod, "Work over F_p");
  av->add_option("--succ", succ_lit, "Second product of a dendriform pair");
  av->add_option("element", lit1)->required();

  auto* as = app.add_subcommand("assoc-search", "All associative elements over F_p");
  as->add_option("--eds", eds_file)->required();
  as->add_option("--mod", mod)->required();

  auto* kz = app.add_subcommand("koszul-dim3", "Arity-3 dimension of the Koszul dual");
  kz->add_option("file", file)->required();

  auto* cp = app.add_subcommand("coproduct", "Coproduct of type ⊗ tree or type ⊗ word");
  cp->add_option("--eds", eds_file)->required();
  cp->add_option("--algebra", algebra)->check(CLI::IsMember({"trees", "words"}));
  cp->add_option("--mode", mode)->check(CLI::IsMember({"recursive", "cuts", "deconcatenation"}));
  cp->add_option("--type", type);
  cp->add_option("element", lit1)->required();

  auto* va = app.add_subcommand("verify-all", "Full conformance report for one EDS");
  va->add_option("--eds", eds_file)->required();
  va->add_option("--bound", bound)->check(CLI::Range(1, 5));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return cmd_check(file);
    if (*catalog) return cmd_catalog(size);
    if (*enumerate) return cmd_enumerate(size, filter, quiet, jobs);
    if (*cor) {
      std::cout << "corank=" << corank(load_eds(file)) << "\n";
      return 0;
    }
    if (*iso) return cmd_iso(file, file2);
    if (*mul) return cmd_mul(eds_file, side, type, algebra, method, lit1, lit2);
    if (*comp) return cmd_compose(eds_file, lit1, rest);
    if (*av) return cmd_assoc_verify(eds_file, lit1, mod, succ_lit);
    if (*as) return cmd_assoc_search(eds_file, mod, jobs);
    if (*kz) return cmd_koszul(file);
    if (*cp) return cmd_coproduct(eds_file, algebra, mode, type, lit1);
    if (*va) return cmd_verify_all(eds_file, bound, jobs);
  } catch (const std::invalid_argument& e) {  // parse errors, bad literals, construction errors
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {  // unsatisfied preconditions
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
