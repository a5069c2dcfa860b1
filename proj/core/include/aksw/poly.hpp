#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace aksw {

/// Variable slots: 0 is q, slot k (k >= 1) is lambda_k.
inline constexpr int kMaxVars = 8;

using Exponents = std::array<std::int16_t, kMaxVars>;
using Coeff = mpz_class;

struct Term {
  Exponents exp{};
  Coeff coef;
};

/// Sparse Laurent polynomial with integer coefficients, terms kept in
/// strictly decreasing lexicographic exponent order (q most significant).
class Poly {
 public:
  Poly() = default;
  explicit Poly(long c);
  explicit Poly(const Coeff& c);

  static Poly variable(int var, int power = 1);
  static Poly monomial(const Exponents& e, Coeff c);
  /// Sorts and merges arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const Coeff& c) const;
  /// Multiply by the monomial x^delta.
  Poly shifted(const Exponents& delta) const;
  /// Componentwise minimum of exponents (zero vector for the zero poly).
  Exponents min_exponents() const;
  int degree(int var) const;
  bool has_negative_exponents() const;
  /// Bit k set when variable k occurs with nonzero exponent.
  unsigned variable_mask() const;
  /// Positive gcd of coefficients; 0 for the zero polynomial.
  Coeff content() const;
  /// Divide all coefficients by c, which must divide each exactly.
  Poly divided_by(const Coeff& c) const;
  /// Exact division for polynomials with nonnegative exponents.
  std::optional<Poly> divide_exact(const Poly& d) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  void normalize();
};

Exponents exp_min(const Exponents& a, const Exponents& b);
Exponents exp_neg(const Exponents& a);
Exponents exp_add(const Exponents& a, const Exponents& b);

/// Gcd of two polynomials with nonnegative exponents, normalized to a
/// positive leading coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Evaluation modulo p at the given point (values indexed by variable slot).
/// Negative exponents use modular inverses; values must be invertible then.
std::uint64_t eval_mod(const Poly& f, const std::array<std::uint64_t, kMaxVars>& point,
                       std::uint64_t p);

/// Name of variable slot k: "q", "l1", ...
std::string variable_name(int var);

}  // namespace aksw
