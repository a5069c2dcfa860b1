#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "aksw/modp.hpp"
#include "aksw/poly.hpp"

namespace aksw {

/// Element of Q(q, l1, ..., l7) in canonical form: numerator a Laurent
/// polynomial, denominator a polynomial with no monomial factor, coprime to
/// the numerator, with positive leading coefficient.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFun(Poly p) : num_(std::move(p)), den_(1) {}

  static RatFun q() { return RatFun(Poly::variable(0)); }
  /// l_k, k >= 1.
  static RatFun lambda(int k) { return RatFun(Poly::variable(k)); }
  static RatFun fraction(const Poly& num, const Poly& den);
  static RatFun from_mpq(const mpq_class& v);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  std::size_t size() const { return num_.size() + den_.size(); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Throws DivisionByZero on zero.
  RatFun inverse() const;
  RatFun pow(long e) const;

  /// `num` when the denominator is 1, else `(num)/(den)`.
  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFun& x) { return x.is_zero(); }
inline std::size_t pivot_cost(const RatFun& x) { return x.size(); }

/// Resolves identifiers beyond `q` and `l<k>`; return nullopt to reject.
using SymbolResolver = std::function<std::optional<RatFun>(std::string_view)>;

/// Parses sums/products/quotients/powers of integers, `q`, `l<k>` and
/// parenthesized subexpressions. Throws ParseError.
RatFun parse_ratfun(std::string_view text, const SymbolResolver& resolver = {});

/// An integer plus an integer combination of beta_1..beta_d.
struct LinearForm {
  std::int64_t constant = 0;
  std::vector<std::int64_t> beta;  // beta[k-1] is the coefficient of beta_k

  static LinearForm integer(std::int64_t c) { return LinearForm{c, {}}; }
  static LinearForm beta_k(int k, std::int64_t coef = 1);

  bool is_integer() const;
  std::int64_t beta_coef(int k) const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(std::int64_t s, LinearForm a);
  friend bool operator==(const LinearForm& a, const LinearForm& b);

  /// `2+b1-3*b2` style.
  std::string to_string() const;
};

using Pairing = LinearForm;

/// q^{constant} * prod l_k^{beta_k}.
RatFun q_power(const Pairing& pairing);

/// Point at which RatFun values are evaluated.
struct ParamAssignment {
  enum class Target { Rationals, PrimeField };
  Target target = Target::Rationals;
  std::uint64_t prime = 0;
  std::vector<mpq_class> rational;      // slot 0 = q, slot k = l_k
  std::vector<std::uint64_t> residues;  // same slots

  static ParamAssignment rationals(std::vector<mpq_class> values);
  static ParamAssignment modular(std::uint64_t prime, std::vector<std::uint64_t> values);
  /// Deterministic pseudo-random point with all coordinates in [2, p-1].
  static ParamAssignment random_modular(std::uint64_t prime, std::uint64_t seed);
};

using FieldValue = std::variant<mpq_class, Fp>;

/// Throws VanishingDenominator naming the denominator when it vanishes.
mpq_class specialize_rational(const RatFun& x, const ParamAssignment& at);
/// Requires at.prime == Fp::modulus().
Fp specialize_mod(const RatFun& x, const ParamAssignment& at);
FieldValue specialize(const RatFun& x, const ParamAssignment& at);

/// Replaces variable slot `var` by `value` exactly.
RatFun substitute(const RatFun& x, int var, const RatFun& value);

}  // namespace aksw
