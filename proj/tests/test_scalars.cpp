#include <gtest/gtest.h>

#include <map>
#include <random>

#include "aksw/error.hpp"
#include "aksw/ground.hpp"
#include "aksw/linalg.hpp"
#include "aksw/ratfun.hpp"

using namespace aksw;

namespace {

RatFun P(const char* s) { return parse_ratfun(s); }

// Schoolbook multiplier on an ordered map, independent of Poly's merge code.
std::map<Exponents, mpz_class> naive_product(const Poly& a, const Poly& b) {
  std::map<Exponents, mpz_class> out;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) out[exp_add(x.exp, y.exp)] += x.coef * y.coef;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly random_poly(std::mt19937_64& rng, int vars, int terms, int max_exp, bool laurent) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> ex(laurent ? -max_exp : 0, max_exp);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Term t;
    for (int k = 0; k < vars; ++k) t.exp[k] = static_cast<std::int16_t>(ex(rng));
    t.coef = coef(rng);
    ts.push_back(t);
  }
  return Poly::from_terms(ts);
}

RatFun random_ratfun(std::mt19937_64& rng) {
  Poly n = random_poly(rng, 3, 3, 2, true);
  Poly d;
  while (d.is_zero()) d = random_poly(rng, 3, 2, 2, false);
  return RatFun::fraction(n, d);
}

}  // namespace

TEST(Poly, ProductMatchesNaiveMultiplier) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Poly a = random_poly(rng, 3, 6, 3, true);
    Poly b = random_poly(rng, 3, 5, 3, true);
    auto expected = naive_product(a, b);
    Poly c = a * b;
    ASSERT_EQ(c.size(), expected.size());
    for (const auto& t : c.terms()) EXPECT_EQ(expected.at(t.exp), t.coef);
  }
}

TEST(Poly, ExactDivisionRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Poly a = random_poly(rng, 3, 4, 3, false);
    Poly b = random_poly(rng, 3, 3, 2, false);
    if (b.is_zero()) continue;
    auto q = (a * b).divide_exact(b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE(Poly::variable(0).divide_exact(Poly::variable(0) + Poly(1)).has_value());
}

TEST(Poly, GcdHandExamples) {
  Poly q = Poly::variable(0), l1 = Poly::variable(1);
  Poly a = (q * q - Poly(1)) * (l1 + q);
  Poly b = (q - Poly(1)) * (l1 + q) * (l1 + q);
  EXPECT_EQ(gcd(a, b), (q - Poly(1)) * (l1 + q));
  EXPECT_EQ(gcd(Poly(6) * q, Poly(4) * q * q), Poly(2) * q);
  EXPECT_EQ(gcd(q + Poly(1), q - Poly(1)), Poly(1));
  EXPECT_EQ(gcd(Poly(), -q), q);
}

TEST(Poly, GcdContainsPlantedFactor) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Poly g = random_poly(rng, 3, 3, 2, false);
    Poly x = random_poly(rng, 3, 3, 2, false);
    Poly y = random_poly(rng, 3, 3, 2, false);
    if (g.is_zero() || x.is_zero() || y.is_zero()) continue;
    Poly a = g * x, b = g * y;
    Poly h = gcd(a, b);
    ASSERT_TRUE(a.divide_exact(h).has_value());
    ASSERT_TRUE(b.divide_exact(h).has_value());
    // Up to content, g divides the gcd.
    EXPECT_TRUE(h.scaled(g.content()).divide_exact(g).has_value());
    // Cofactors are coprime.
    EXPECT_TRUE(gcd(*a.divide_exact(h), *b.divide_exact(h)).is_constant());
  }
}

TEST(RatFun, SpecExamples) {
  RatFun q = RatFun::q();
  EXPECT_TRUE(((q - q.inverse()) / (q - q.inverse())).is_one());
  EXPECT_TRUE((P("q*l1") - P("q*l1")).is_zero());
  EXPECT_EQ(P("(1+q^2)*(1+q^-2)"), P("q^2+2+q^-2"));
  EXPECT_EQ((P("1+q^2") * P("1+q^-2")).to_string(), "q^2 + 2 + q^-2");
}

TEST(RatFun, DivisionByZeroIsExplicit) {
  EXPECT_THROW(RatFun(1) / RatFun(0), DivisionByZero);
  EXPECT_THROW(P("1/(q-q)"), ParseError);
}

TEST(RatFun, CanonicalFormIsStructural) {
  RatFun a = P("(q^2-1)/(q-1)");
  EXPECT_EQ(a, P("q+1"));
  EXPECT_TRUE(a.is_polynomial());
  RatFun b = P("(l1 - q^2*l2)/(q*l2 - q^-1*l1)");
  EXPECT_EQ(b, P("-q"));
  RatFun c = P("1/(2*q - 2)");
  EXPECT_EQ(c.den().leading().coef, 2);
  EXPECT_EQ(RatFun::fraction(c.num(), c.den()), c);
  EXPECT_EQ(P("-1/(1-q)"), P("1/(q-1)"));
}

TEST(RatFun, PrintParseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    RatFun x = random_ratfun(rng);
    EXPECT_EQ(parse_ratfun(x.to_string()), x) << x.to_string();
  }
}

TEST(RatFun, FieldLawsOnRandomTriples) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    RatFun a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, RatFun(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    // Canonicalization is idempotent.
    EXPECT_EQ(RatFun::fraction(a.num(), a.den()), a);
  }
}

TEST(QPower, Examples) {
  EXPECT_TRUE(q_power(LinearForm{}).is_one());
  LinearForm f = LinearForm::beta_k(1) + LinearForm::integer(2);
  EXPECT_EQ(q_power(f), P("q^2*l1"));
  LinearForm g = 2 * (LinearForm::beta_k(2) - LinearForm::integer(1));
  EXPECT_EQ(q_power(g), P("q^-2*l2^2"));
  EXPECT_EQ(g.to_string(), "-2+2*b2");
}

TEST(Specialize, Examples) {
  auto at = ParamAssignment::rationals({mpq_class(1)});
  EXPECT_EQ(specialize_rational(P("q - q^-1"), at), 0);
  auto at2 = ParamAssignment::rationals({mpq_class(2), mpq_class(3), mpq_class(3)});
  EXPECT_EQ(specialize_rational(P("l1*l2^-1"), at2), 1);
  auto bad = ParamAssignment::rationals({mpq_class(1), mpq_class(2)});
  try {
    specialize_rational(P("1/(q^2 - 1)"), bad);
    FAIL() << "expected VanishingDenominator";
  } catch (const VanishingDenominator& e) {
    EXPECT_NE(std::string(e.what()).find("q^2 - 1"), std::string::npos);
  }
}

TEST(Specialize, CommutesWithArithmetic) {
  std::mt19937_64 rng(23);
  auto at = ParamAssignment::random_modular(Fp::modulus(), 99);
  auto atq = ParamAssignment::rationals({mpq_class(3, 2), mpq_class(5), mpq_class(-7, 3)});
  for (int i = 0; i < 25; ++i) {
    RatFun a = random_ratfun(rng), b = random_ratfun(rng);
    EXPECT_EQ(specialize_mod(a + b, at), specialize_mod(a, at) + specialize_mod(b, at));
    EXPECT_EQ(specialize_mod(a - b, at), specialize_mod(a, at) - specialize_mod(b, at));
    EXPECT_EQ(specialize_mod(a * b, at), specialize_mod(a, at) * specialize_mod(b, at));
    if (!b.is_zero()) EXPECT_EQ(specialize_mod(a / b, at), specialize_mod(a, at) / specialize_mod(b, at));
    mpq_class lhs = specialize_rational(a * b, atq);
    EXPECT_EQ(lhs, specialize_rational(a, atq) * specialize_rational(b, atq));
  }
}

TEST(Substitute, RelatedLambdas) {
  // l2 -> q^2 l1 kills l2 - q^2 l1.
  RatFun x = P("(l2 - q^2*l1)*(l1+l2)");
  EXPECT_TRUE(substitute(x, 2, P("q^2*l1")).is_zero());
  EXPECT_EQ(substitute(P("l2/l1"), 2, P("q*l1")), P("q"));
}

TEST(Fp, ArithmeticAndModulus) {
  Fp a(5), b(-3);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((a * a.inverse()).value(), 1u);
  EXPECT_EQ(Fp(2).pow(61).value(), 1u);  // 2^61 = 1 mod 2^61 - 1
  EXPECT_THROW(Fp(0).inverse(), DivisionByZero);
  EXPECT_TRUE(is_prime_u64(1000000007ULL));
  EXPECT_FALSE(is_prime_u64(1000000007ULL * 3));
  EXPECT_THROW(Fp::set_modulus(91), Error);
}

TEST(Linalg, RankNullspaceDeterminant) {
  Matrix<RatFun> m(2, 3);
  m(0, 0) = P("q");
  m(0, 1) = P("1");
  m(1, 0) = P("q^2");
  m(1, 1) = P("q");
  m(1, 2) = P("l1");
  EXPECT_EQ(rank(m), 2u);
  Matrix<RatFun> k = nullspace(m);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((m * k).is_zero());
  Matrix<RatFun> s(2, 2);
  s(0, 0) = P("q");
  s(0, 1) = P("l1");
  s(1, 0) = P("1");
  s(1, 1) = P("q");
  EXPECT_EQ(determinant(s), P("q^2 - l1"));
  auto inv = inverse(s);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(s * *inv, Matrix<RatFun>::identity(2));
}
