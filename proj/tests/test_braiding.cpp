#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "aksw/braiding.hpp"
#include "aksw/error.hpp"
#include "aksw/linalg.hpp"

using namespace aksw;

namespace {

RatFun P(const char* s) { return parse_ratfun(s); }
MultiPartition MP(const char* s) { return MultiPartition::parse(s); }

}  // namespace

TEST(Braiding, StandardTableMatches) {
  for (int m = 1; m <= 4; ++m) EXPECT_TRUE(braiding_table_check(m).holds) << m;
}

TEST(Braiding, SpecExamplesOnVV) {
  StandardModule v(2);
  const Weight w12 = Weight::eps(2, 1) + Weight::eps(2, 2);
  // Basis order: v1 (x) v2, then v2 (x) v1.
  Matrix<RatFun> c = braiding_map(v, v, w12);
  EXPECT_EQ(c(1, 0), RatFun(1));
  EXPECT_EQ(c(0, 0), P("q - q^-1"));
  EXPECT_EQ(c(0, 1), RatFun(1));
  EXPECT_TRUE(c(1, 1).is_zero());
  Matrix<RatFun> c11 = braiding_map(v, v, 2 * Weight::eps(2, 1));
  EXPECT_EQ(c11(0, 0), P("q"));
  // F acts on the first factor and E on the second.
  auto t = theta_apply(v, v, w12, {RatFun(1), RatFun(0)});
  EXPECT_EQ(t[0], RatFun(1));
  EXPECT_EQ(t[1], P("q - q^-1"));
}

TEST(Braiding, ThetaFixesTopTimesV1) {
  auto mod = std::make_shared<ParabolicVerma>(std::vector<int>{1, 1}, 3);
  StandardModule v(2);
  const Weight w = mod->top() + Weight::eps(2, 1);
  Matrix<RatFun> t = theta_matrix(*mod, v, w);
  EXPECT_EQ(t, Matrix<RatFun>::identity(t.rows()));
}

TEST(Braiding, IsModuleMorphism) {
  for (int m = 2; m <= 3; ++m) {
    auto v = std::make_shared<StandardModule>(m);
    EXPECT_FALSE(braiding_morphism_defect(v, v).has_value()) << *braiding_morphism_defect(v, v);
  }
  for (std::vector<int> levi : {std::vector<int>{1, 1}, {2}, {1, 1, 1}, {2, 1}, {1, 2}}) {
    int m = 0;
    for (int b : levi) m += b;
    auto mod = std::make_shared<ParabolicVerma>(levi, 3);
    auto v = std::make_shared<StandardModule>(m);
    auto d1 = braiding_morphism_defect(mod, v);
    EXPECT_FALSE(d1.has_value()) << *d1;
    auto d2 = braiding_morphism_defect(v, mod);
    EXPECT_FALSE(d2.has_value()) << *d2;
  }
}

// Mixed conventions rescale E_(1,3) and F_(1,3) by non-reciprocal factors;
// swapping both the order and q rescales by -q^-1 and -q, which cancel.
TEST(Braiding, RootConventionIsPinnedByMorphism) {
  auto mod = std::make_shared<ParabolicVerma>(std::vector<int>{1, 1, 1}, 3);
  auto v = std::make_shared<StandardModule>(3);
  for (RootConvention c : {RootConvention{false, true}, RootConvention{true, false}}) {
    EXPECT_TRUE(braiding_morphism_defect(mod, v, c).has_value());
    EXPECT_TRUE(braiding_morphism_defect(v, mod, c).has_value());
  }
  EXPECT_FALSE(braiding_morphism_defect(mod, v, RootConvention{true, true}).has_value());
}

TEST(BraidAction, R0SpectrumForTwoBlocks) {
  auto e = drinfeld_check({1, 1});
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].eigenvalue, P("l1^2"));
  EXPECT_EQ(e[1].eigenvalue, P("l2^2*q^-2"));
  for (const auto& x : e) EXPECT_TRUE(x.matches()) << x.weight.to_string();
  for (std::vector<int> levi : {std::vector<int>{2, 1}, {1, 1, 1}, {2, 2}})
    for (const auto& x : drinfeld_check(levi)) EXPECT_TRUE(x.matches()) << x.weight.to_string();
}

TEST(BraidAction, SingleStepBranching) {
  for (std::vector<int> levi : {std::vector<int>{1, 1}, {2, 1}, {1, 2}}) {
    BraidAction act(levi, 1);
    const int m = act.m();
    int mt = 0;
    std::set<int> firsts;
    for (int b : levi) {
      firsts.insert(mt + 1);
      mt += b;
    }
    for (int k = 1; k <= m; ++k) {
      const Weight w = act.verma().top() + Weight::eps(m, k);
      EXPECT_EQ(highest_weight_vectors(act.space(), w).cols(), firsts.count(k) ? 1u : 0u) << k;
    }
  }
}

TEST(BraidAction, QuadraticAndBraidRelations) {
  BraidAction act({1, 1}, 2);
  const RatFun q = P("q");
  for (const auto& w : act.tracked_weights()) {
    const auto& r0 = act.R(0, w);
    const auto& r1 = act.R(1, w);
    auto id = Matrix<RatFun>::identity(r1.rows());
    EXPECT_EQ(r1 * r1, id + (q - q.inverse()) * r1) << w.to_string();
    EXPECT_EQ(r0 * r1 * r0 * r1, r1 * r0 * r1 * r0) << w.to_string();
  }
}

TEST(BraidAction, JucysMurphyCommute) {
  BraidAction act({1, 1}, 3);
  for (const auto& w : act.tracked_weights()) {
    auto x = jucys_murphy_action(act.operators(w));
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = a + 1; b < x.size(); ++b) EXPECT_EQ(x[a] * x[b], x[b] * x[a]) << w.to_string();
  }
}

TEST(SchurWeyl, TwoBlocksTwoFactors) {
  SWReport r = schur_weyl_verify({1, 1}, 2);
  for (const auto& w : r.witnesses) ADD_FAILURE() << w;
  ASSERT_EQ(r.shapes.size(), 3u);
  EXPECT_EQ(r.shapes[0].shape, MP("(2|)"));
  std::vector<std::size_t> dims;
  for (const auto& s : r.shapes) dims.push_back(s.hwv_dim);
  std::vector<std::size_t> want = {1, 2, 1};
  // Enumeration order of shapes may interleave; compare as a multiset too.
  std::sort(dims.begin(), dims.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(dims, want);
  EXPECT_EQ(r.image_rank, 6u);
  EXPECT_EQ(r.expected_rank, 6u);
  EXPECT_TRUE(r.kernel_matches);
  ASSERT_TRUE(r.blob_ideal_matches.has_value());
  EXPECT_TRUE(*r.blob_ideal_matches);
  EXPECT_TRUE(r.passed());
}

TEST(SchurWeyl, TemperleyLiebRanks) {
  SWReport two = schur_weyl_verify({2}, 2);
  EXPECT_EQ(two.image_rank, 2u);
  EXPECT_TRUE(two.passed());
  SWReport three = schur_weyl_verify({2}, 3);
  EXPECT_EQ(three.image_rank, 5u);
  EXPECT_TRUE(three.passed());
}

TEST(SchurWeyl, HeckeTypeA) {
  SWReport r = schur_weyl_verify({3}, 2);
  EXPECT_EQ(r.image_rank, 2u);
  EXPECT_TRUE(r.passed());
}
