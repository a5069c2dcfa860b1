#include "aksw/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "aksw/error.hpp"
#include "modarith.hpp"

namespace aksw {

namespace {

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_one()) return a;
  auto r = a.divide_exact(b);
  if (!r) throw Error("internal: inexact polynomial division");
  return *r;
}

// Divide a Laurent polynomial by a polynomial factor of its monomial-free part.
Poly laurent_div(const Poly& a, const Poly& b) {
  if (b.is_one()) return a;
  Exponents m = a.min_exponents();
  return exact_div(a.shifted(exp_neg(m)), b).shifted(m);
}

Poly laurent_gcd(const Poly& laurent, const Poly& poly) {
  if (poly.is_one()) return poly;
  return gcd(laurent.shifted(exp_neg(laurent.min_exponents())), poly);
}

}  // namespace

RatFun RatFun::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  RatFun r;
  if (num.is_zero()) return r;
  Exponents md = den.min_exponents();
  Poly n = num.shifted(exp_neg(md));
  Poly d = den.shifted(exp_neg(md));
  Poly g = laurent_gcd(n, d);
  n = laurent_div(n, g);
  d = exact_div(d, g);
  if (d.leading().coef < 0) {
    n = -n;
    d = -d;
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

RatFun RatFun::from_mpq(const mpq_class& v) {
  return fraction(Poly(Coeff(v.get_num())), Poly(Coeff(v.get_den())));
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFun r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (a.den_ == b.den_) {
    Poly n = a.num_ + b.num_;
    if (n.is_zero()) return r;
    Poly h = laurent_gcd(n, a.den_);
    r.num_ = laurent_div(n, h);
    r.den_ = exact_div(a.den_, h);
    return r;
  }
  Poly g = gcd(a.den_, b.den_);
  Poly da = exact_div(a.den_, g);
  Poly db = exact_div(b.den_, g);
  Poly n = a.num_ * db + b.num_ * da;
  if (n.is_zero()) return r;
  Poly d = da * b.den_;
  Poly h = laurent_gcd(n, g);
  r.num_ = laurent_div(n, h);
  r.den_ = exact_div(d, h);
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  RatFun r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  Poly g1 = laurent_gcd(a.num_, b.den_);
  Poly g2 = laurent_gcd(b.num_, a.den_);
  r.num_ = laurent_div(a.num_, g1) * laurent_div(b.num_, g2);
  r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  if (r.den_.leading().coef < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun& RatFun::operator+=(const RatFun& o) { return *this = *this + o; }
RatFun& RatFun::operator-=(const RatFun& o) { return *this = *this - o; }
RatFun& RatFun::operator*=(const RatFun& o) { return *this = *this * o; }
RatFun& RatFun::operator/=(const RatFun& o) { return *this = *this / o; }

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RatFun r;
  Exponents m = num_.min_exponents();
  Poly d = num_.shifted(exp_neg(m));
  Poly n = den_.shifted(exp_neg(m));
  if (d.leading().coef < 0) {
    d = -d;
    n = -n;
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

RatFun RatFun::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun result(1);
  RatFun base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolResolver& resolver) : s_(text), resolver_(resolver) {}

  RatFun parse() {
    RatFun v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  const SymbolResolver& resolver_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun v = product();
    while (true) {
      if (accept('+')) {
        v += product();
      } else if (accept('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  RatFun product() {
    RatFun v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        RatFun d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFun unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    RatFun base = atom();
    if (accept('^')) {
      long e = exponent();
      if (e < 0 && base.is_zero()) fail("zero to a negative power");
      return base.pow(e);
    }
    return base;
  }

  long exponent() {
    if (accept('(')) {
      long e = signed_integer();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    return signed_integer();
  }

  long signed_integer() {
    bool neg = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  RatFun atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFun(Poly(Coeff(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (resolver_) {
        if (auto v = resolver_(name)) return *v;
      }
      if (name == "q") return RatFun::q();
      if (name.size() >= 2 && name[0] == 'l') {
        bool digits = true;
        for (char ch : name.substr(1)) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
        if (digits) {
          int k = std::stoi(std::string(name.substr(1)));
          if (k >= 1 && k < kMaxVars) return RatFun::lambda(k);
        }
      }
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

RatFun parse_ratfun(std::string_view text, const SymbolResolver& resolver) { return Parser(text, resolver).parse(); }

// ---------------------------------------------------------------------------
// linear forms

LinearForm LinearForm::beta_k(int k, std::int64_t coef) {
  LinearForm f;
  f.beta.assign(static_cast<std::size_t>(k), 0);
  f.beta[static_cast<std::size_t>(k - 1)] = coef;
  return f;
}

bool LinearForm::is_integer() const {
  for (auto b : beta)
    if (b != 0) return false;
  return true;
}

std::int64_t LinearForm::beta_coef(int k) const {
  return static_cast<std::size_t>(k) <= beta.size() ? beta[static_cast<std::size_t>(k - 1)] : 0;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant += o.constant;
  if (beta.size() < o.beta.size()) beta.resize(o.beta.size(), 0);
  for (std::size_t i = 0; i < o.beta.size(); ++i) beta[i] += o.beta[i];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  constant -= o.constant;
  if (beta.size() < o.beta.size()) beta.resize(o.beta.size(), 0);
  for (std::size_t i = 0; i < o.beta.size(); ++i) beta[i] -= o.beta[i];
  return *this;
}

LinearForm operator*(std::int64_t s, LinearForm a) {
  a.constant *= s;
  for (auto& b : a.beta) b *= s;
  return a;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
  if (a.constant != b.constant) return false;
  std::size_t n = std::max(a.beta.size(), b.beta.size());
  for (std::size_t i = 1; i <= n; ++i)
    if (a.beta_coef(static_cast<int>(i)) != b.beta_coef(static_cast<int>(i))) return false;
  return true;
}

std::string LinearForm::to_string() const {
  std::string out;
  if (constant != 0 || is_integer()) out = std::to_string(constant);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    std::int64_t c = beta[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + "*";
    out += "b" + std::to_string(i + 1);
  }
  return out;
}

RatFun q_power(const Pairing& pairing) {
  Exponents e{};
  e[0] = static_cast<std::int16_t>(pairing.constant);
  for (std::size_t i = 0; i < pairing.beta.size(); ++i) {
    if (i + 1 >= static_cast<std::size_t>(kMaxVars)) {
      if (pairing.beta[i] != 0) throw Error("too many lambda parameters");
      continue;
    }
    e[i + 1] = static_cast<std::int16_t>(pairing.beta[i]);
  }
  return RatFun(Poly::monomial(e, Coeff(1)));
}

// ---------------------------------------------------------------------------
// specialization

ParamAssignment ParamAssignment::rationals(std::vector<mpq_class> values) {
  ParamAssignment a;
  a.target = Target::Rationals;
  a.rational = std::move(values);
  if (a.rational.empty() || a.rational[0] == 0) throw Error("assigned q must be nonzero");
  return a;
}

ParamAssignment ParamAssignment::modular(std::uint64_t prime, std::vector<std::uint64_t> values) {
  ParamAssignment a;
  a.target = Target::PrimeField;
  a.prime = prime;
  for (auto& v : values) v %= prime;
  a.residues = std::move(values);
  if (a.residues.empty() || a.residues[0] == 0) throw Error("assigned q must be nonzero");
  return a;
}

ParamAssignment ParamAssignment::random_modular(std::uint64_t prime, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(2, prime - 1);
  std::vector<std::uint64_t> values(kMaxVars);
  for (auto& v : values) v = dist(rng);
  return modular(prime, std::move(values));
}

namespace {

mpq_class eval_rational(const Poly& f, const std::vector<mpq_class>& pt) {
  mpq_class acc = 0;
  for (const auto& t : f.terms()) {
    mpq_class v(t.coef);
    for (int k = 0; k < kMaxVars; ++k) {
      int e = t.exp[k];
      if (e == 0) continue;
      mpq_class x = static_cast<std::size_t>(k) < pt.size() ? pt[static_cast<std::size_t>(k)] : mpq_class(0);
      if (e < 0) {
        if (x == 0) throw VanishingDenominator("variable " + variable_name(k) + " assigned 0 appears with a negative exponent");
        x = 1 / x;
        e = -e;
      }
      mpq_class p = 1;
      for (int i = 0; i < e; ++i) p *= x;
      v *= p;
    }
    acc += v;
  }
  return acc;
}

std::array<std::uint64_t, kMaxVars> residue_point(const ParamAssignment& at) {
  std::array<std::uint64_t, kMaxVars> pt{};
  for (std::size_t k = 0; k < pt.size() && k < at.residues.size(); ++k) pt[k] = at.residues[k];
  return pt;
}

}  // namespace

mpq_class specialize_rational(const RatFun& x, const ParamAssignment& at) {
  if (at.target != ParamAssignment::Target::Rationals) throw Error("assignment is not over the rationals");
  mpq_class d = eval_rational(x.den(), at.rational);
  if (d == 0) throw VanishingDenominator("denominator " + x.den().to_string() + " vanishes at the assignment");
  mpq_class r = eval_rational(x.num(), at.rational) / d;
  r.canonicalize();
  return r;
}

Fp specialize_mod(const RatFun& x, const ParamAssignment& at) {
  if (at.target != ParamAssignment::Target::PrimeField) throw Error("assignment is not over a prime field");
  if (at.prime != Fp::modulus()) throw Error("assignment prime differs from the active modulus");
  auto pt = residue_point(at);
  if (x.num().has_negative_exponents())
    for (int k = 0; k < kMaxVars; ++k)
      if (pt[k] == 0 && x.num().degree(k) != 0)
        for (const auto& t : x.num().terms())
          if (t.exp[k] < 0)
            throw VanishingDenominator("variable " + variable_name(k) + " assigned 0 appears with a negative exponent");
  std::uint64_t d = eval_mod(x.den(), pt, at.prime);
  if (d == 0) throw VanishingDenominator("denominator " + x.den().to_string() + " vanishes at the assignment");
  std::uint64_t n = eval_mod(x.num(), pt, at.prime);
  return Fp::from_raw(n) / Fp::from_raw(d);
}

FieldValue specialize(const RatFun& x, const ParamAssignment& at) {
  if (at.target == ParamAssignment::Target::Rationals) return specialize_rational(x, at);
  return specialize_mod(x, at);
}

namespace {

RatFun substitute_poly(const Poly& f, int var, const RatFun& value) {
  // Group by exponent of var so each power of value is computed once.
  std::vector<std::pair<int, std::vector<Term>>> groups;
  for (const auto& t : f.terms()) {
    Term rest = t;
    rest.exp[var] = 0;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == t.exp[var]; });
    if (it == groups.end()) {
      groups.push_back({t.exp[var], {}});
      it = groups.end() - 1;
    }
    it->second.push_back(std::move(rest));
  }
  RatFun acc;
  for (auto& [e, terms] : groups) acc += RatFun(Poly::from_terms(std::move(terms))) * value.pow(e);
  return acc;
}

}  // namespace

RatFun substitute(const RatFun& x, int var, const RatFun& value) {
  RatFun n = substitute_poly(x.num(), var, value);
  RatFun d = substitute_poly(x.den(), var, value);
  if (d.is_zero()) throw VanishingDenominator("denominator " + x.den().to_string() + " vanishes under the substitution");
  return n / d;
}

}  // namespace aksw
