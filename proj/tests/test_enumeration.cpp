#include "eds/enumeration.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace eds;

namespace {

// Brute force over all 16^4 table tuples on two symbols.
std::vector<FiniteEds> brute_force2() {
  std::vector<FiniteEds> out;
  for (int t = 0; t < 65536; ++t) {
    std::array<OpTable, 4> T;
    for (int k = 0; k < 4; ++k) {
      int c = (t >> (4 * k)) & 15;
      T[k] = OpTable(2, {Symbol(c & 1), Symbol(c >> 1 & 1), Symbol(c >> 2 & 1), Symbol(c >> 3 & 1)});
    }
    FiniteEds e(T[0], T[1], T[2], T[3]);
    if (is_eds(e)) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST(Enumerate, SizeTwoCounts) {
  auto all = enumerate_eds(2, {});
  EXPECT_EQ(all.total, 45u);
  EXPECT_EQ(all.classes, 24u);
  EXPECT_EQ(all.total, brute_force2().size());

  EnumFilter d;
  d.diassociative_only = true;
  auto di = enumerate_eds(2, d);
  EXPECT_EQ(di.total, 13u);
  EXPECT_EQ(di.classes, 8u);

  EnumFilter nd;
  nd.nondegenerate_only = true;
  auto r = enumerate_eds(2, nd);
  EXPECT_EQ(r.total, 7u);
  EXPECT_EQ(r.classes, 4u);
}

TEST(Enumerate, ClassesMatchCatalogOneToOne) {
  EnumFilter f;
  f.up_to_iso = true;
  auto r = enumerate_eds(2, f);
  ASSERT_EQ(r.items.size(), 24u);
  ASSERT_EQ(r.class_sizes.size(), 24u);
  std::size_t sum = 0;
  for (auto s : r.class_sizes) sum += s;
  EXPECT_EQ(sum, 45u);
  auto cat = catalog2();
  std::multiset<std::string> hit;
  for (auto& rep : r.items) {
    int matches = 0;
    for (auto& c : cat)
      if (are_isomorphic(rep, c)) {
        ++matches;
        hit.insert(c.label());
      }
    EXPECT_EQ(matches, 1);
  }
  EXPECT_EQ(hit.size(), 24u);
  EXPECT_EQ(std::set<std::string>(hit.begin(), hit.end()).size(), 24u);
}

TEST(Enumerate, CommutativeFilter) {
  EnumFilter f;
  f.commutative_only = true;
  f.up_to_iso = true;
  auto r = enumerate_eds(2, f);
  for (auto& e : r.items) EXPECT_TRUE(is_commutative(e));
  std::size_t expected = 0;
  for (auto& c : catalog2()) expected += is_commutative(c);
  EXPECT_EQ(r.classes, expected);
}

TEST(Enumerate, OutputIsDeterministic) {
  EnumFilter f;
  f.up_to_iso = true;
  auto a = enumerate_eds(2, f, 1), b = enumerate_eds(2, f, 4);
  ASSERT_EQ(a.items.size(), b.items.size());
  for (std::size_t i = 0; i < a.items.size(); ++i) EXPECT_TRUE(a.items[i].same_tables(b.items[i]));
}

TEST(Enumerate, SizeThreeNondegenerate) {
  EnumFilter f;
  f.nondegenerate_only = true;
  f.up_to_iso = true;
  auto r = enumerate_eds(3, f);
  EXPECT_EQ(r.total, 13u);
  ASSERT_EQ(r.classes, 4u);
  std::vector<FiniteEds> named{matching_eds(3), family_eds(cyclic_group(3)), star_eds_point(cyclic_group(3), 0),
                               star_eds_point(cyclic_group(3), 1)};
  for (auto& rep : r.items) {
    int matches = 0;
    for (auto& c : named) matches += are_isomorphic(rep, c).has_value();
    EXPECT_EQ(matches, 1);
  }
}

TEST(Enumerate, SizeThreeTotals) {
  auto r = enumerate_eds(3, {});
  EXPECT_EQ(r.total, 2049u);
  EXPECT_EQ(r.classes, 356u);
}

TEST(Enumerate, SizeOneAndBadSize) {
  auto r = enumerate_eds(1, {});
  EXPECT_EQ(r.total, 1u);
  EXPECT_THROW(enumerate_eds(0, {}), std::invalid_argument);
  EXPECT_THROW(enumerate_eds(5, {}), std::invalid_argument);
}
