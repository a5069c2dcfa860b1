#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "aksw/combinatorics.hpp"
#include "aksw/error.hpp"

using namespace aksw;

namespace {

MultiPartition MP(const char* s) { return MultiPartition::parse(s); }

// Coefficient of x^n in (prod_k 1/(1-x^k))^d, by truncated series products.
std::uint64_t multipartition_count_series(int d, int n) {
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) p[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i - k)];
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(n) + 1, 0);
  acc[0] = 1;
  for (int c = 0; c < d; ++c) {
    std::vector<std::uint64_t> next(acc.size(), 0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) next[static_cast<std::size_t>(i + j)] += acc[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)];
    acc = next;
  }
  return acc[static_cast<std::size_t>(n)];
}

// Counts standard fillings by trying every permutation of 1..n on the boxes.
std::size_t brute_force_tableaux(const MultiPartition& mu) {
  std::vector<Box> boxes;
  for (int c = 1; c <= mu.d(); ++c)
    for (int a = 1; a <= static_cast<int>(mu.component(c).size()); ++a)
      for (int b = 1; b <= mu.row_length(c, a); ++b) boxes.push_back(Box{a, b, c});
  std::vector<int> perm(boxes.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t count = 0;
  do {
    auto entry = [&](int a, int b, int c) {
      for (std::size_t k = 0; k < boxes.size(); ++k)
        if (boxes[k] == Box{a, b, c}) return perm[k];
      return 0;
    };
    bool ok = true;
    for (std::size_t k = 0; k < boxes.size() && ok; ++k) {
      const Box& x = boxes[k];
      if (x.col > 1 && entry(x.row, x.col - 1, x.comp) > perm[k]) ok = false;
      if (x.row > 1 && entry(x.row - 1, x.col, x.comp) > perm[k]) ok = false;
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST(MultiPartition, ParsePrintRoundTrip) {
  MultiPartition mu = MP("(2,1|,|3)");
  EXPECT_EQ(mu.d(), 3);
  EXPECT_EQ(mu.size(), 6);
  EXPECT_EQ(mu.to_string(), "(2,1|,|3)");
  EXPECT_EQ(MP("(2,1||3)"), mu);
  EXPECT_EQ(MP(mu.to_string().c_str()), mu);
  EXPECT_EQ(MP("()").d(), 1);
  EXPECT_EQ(MP("(|)").d(), 2);
  EXPECT_THROW(MP("(1,2)"), ParseError);
  EXPECT_THROW(MP("(1,,2)"), ParseError);
}

TEST(Enumeration, SpecExamples) {
  auto m21 = multipartitions(2, 1);
  ASSERT_EQ(m21.size(), 2u);
  EXPECT_EQ(m21[0], MP("(1|)"));
  EXPECT_EQ(m21[1], MP("(|1)"));
  EXPECT_EQ(multipartitions(1, 3).size(), 3u);
  auto m22 = multipartitions(2, 2);
  std::vector<std::string> names;
  for (auto& m : m22) names.push_back(m.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"(2|,)", "(1,1|,)", "(1|1)", "(,|2)", "(,|1,1)"}));
}

TEST(Enumeration, CountMatchesGeneratingFunction) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(multipartitions(d, n).size(), multipartition_count_series(d, n)) << d << "," << n;
}

TEST(Enumeration, Restricted) {
  auto r = restricted_multipartitions(2, 2, {1, 1});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], MP("(2|)"));
  EXPECT_EQ(r[1], MP("(1|1)"));
  EXPECT_EQ(r[2], MP("(|2)"));
  EXPECT_EQ(restricted_multipartitions(2, 2, {2, 2}).size(), 5u);
  auto a = restricted_multipartitions(1, 2, {1});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], MP("(2)"));
}

TEST(Boxes, RemovableAndAddable) {
  auto rem = removable_boxes(MP("(2,1|,|3)"));
  EXPECT_EQ(rem, (std::vector<Box>{{1, 2, 1}, {2, 1, 1}, {1, 3, 3}}));
  auto add = addable_boxes(MultiPartition::empty(3));
  EXPECT_EQ(add, (std::vector<Box>{{1, 1, 1}, {1, 1, 2}, {1, 1, 3}}));
  auto bounded = addable_boxes(MP("(1|1)"), std::vector<int>{1, 1});
  EXPECT_EQ(bounded, (std::vector<Box>{{1, 2, 1}, {1, 2, 2}}));
}

TEST(Boxes, RemoveThenAddIsIdentity) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : multipartitions(2, n))
      for (const auto& b : removable_boxes(mu)) EXPECT_EQ(mu.without_box(b).with_box(b), mu);
}

TEST(Tableaux, SpecExamples) {
  EXPECT_EQ(standard_tableaux(MP("(1|1)")).size(), 2u);
  EXPECT_EQ(standard_tableaux(MP("(2|1)")).size(), 3u);
  auto ts = standard_tableaux(MP("(1,1||2)"));
  StandardTableau example{MP("(1,1||2)"), {{1, 1, 1}, {1, 1, 3}, {1, 2, 3}, {2, 1, 1}}};
  ASSERT_NE(std::find(ts.begin(), ts.end(), example), ts.end());
  auto fill = example.filling();
  EXPECT_EQ(fill[0], (std::vector<std::vector<int>>{{1}, {4}}));
  EXPECT_TRUE(fill[1].empty());
  EXPECT_EQ(fill[2], (std::vector<std::vector<int>>{{2, 3}}));
  EXPECT_EQ(content_of_entry(example, 3), (Box{1, 2, 3}));
  EXPECT_EQ(content_of_entry(example, 4), (Box{2, 1, 1}));
  for (const auto& t : ts) EXPECT_EQ(content_of_entry(t, 1).row, 1);
}

TEST(Tableaux, FirstTableauFillsInReadingOrder) {
  auto ts = standard_tableaux(MP("(2,1|1)"));
  EXPECT_EQ(ts.front().to_string(), "[(1,1,1),(1,2,1),(2,1,1),(1,1,2)]");
}

TEST(Tableaux, CountsMatchBruteForceAndPathCount) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 5; ++n)
      for (const auto& mu : multipartitions(d, n)) {
        auto count = standard_tableaux(mu).size();
        EXPECT_EQ(count, path_count(mu));
        if (n <= 4) EXPECT_EQ(count, brute_force_tableaux(mu)) << mu.to_string();
      }
}

TEST(PathCount, Examples) {
  EXPECT_EQ(path_count(MP("(1|1)")), 2u);
  EXPECT_EQ(path_count(MP("(2|)")), 1u);
  std::uint64_t total = 0;
  for (const auto& mu : multipartitions(2, 2)) total += path_count(mu) * path_count(mu);
  EXPECT_EQ(total, 8u);
  EXPECT_EQ(path_count(MP("(1|1)"), std::vector<int>{1, 1}), 2u);
}
