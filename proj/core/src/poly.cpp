#include "aksw/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "modarith.hpp"

namespace aksw {

namespace {

bool exp_greater(const Exponents& a, const Exponents& b) { return b < a; }

bool exp_nonneg(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](std::int16_t x) { return x >= 0; });
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int k = 0; k < kMaxVars; ++k) r[k] = static_cast<std::int16_t>(a[k] - b[k]);
  return r;
}

// Merge of two sorted term lists, b scaled by sign.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && exp_greater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || exp_greater(b[j].exp, a[i].exp)) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Coeff c = subtract ? Coeff(a[i].coef - b[j].coef) : Coeff(a[i].coef + b[j].coef);
      if (c != 0) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Exponents exp_min(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int k = 0; k < kMaxVars; ++k) r[k] = std::min(a[k], b[k]);
  return r;
}

Exponents exp_neg(const Exponents& a) {
  Exponents r{};
  for (int k = 0; k < kMaxVars; ++k) r[k] = static_cast<std::int16_t>(-a[k]);
  return r;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int k = 0; k < kMaxVars; ++k) r[k] = static_cast<std::int16_t>(a[k] + b[k]);
  return r;
}

Poly::Poly(long c) {
  if (c != 0) terms_.push_back(Term{Exponents{}, Coeff(c)});
}

Poly::Poly(const Coeff& c) {
  if (c != 0) terms_.push_back(Term{Exponents{}, c});
}

Poly Poly::variable(int var, int power) {
  Exponents e{};
  e[var] = static_cast<std::int16_t>(power);
  return monomial(e, Coeff(1));
}

Poly Poly::monomial(const Exponents& e, Coeff c) {
  Poly p;
  if (c != 0) p.terms_.push_back(Term{e, std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return exp_greater(a.exp, b.exp); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponents{});
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Exponents{} && terms_[0].coef == 1;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].exp).scaled(b.terms_[0].coef);
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].exp).scaled(a.terms_[0].coef);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back(Term{exp_add(x.exp, y.exp), x.coef * y.coef});
  return Poly::from_terms(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Poly Poly::scaled(const Coeff& c) const {
  if (c == 0) return Poly();
  if (c == 1) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::shifted(const Exponents& delta) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.exp = exp_add(t.exp, delta);
  return r;
}

Exponents Poly::min_exponents() const {
  if (terms_.empty()) return Exponents{};
  Exponents m = terms_[0].exp;
  for (const auto& t : terms_) m = exp_min(m, t.exp);
  return m;
}

int Poly::degree(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exp[var] > d) d = t.exp[var];
    first = false;
  }
  return d;
}

bool Poly::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return !exp_nonneg(t.exp); });
}

unsigned Poly::variable_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_)
    for (int k = 0; k < kMaxVars; ++k)
      if (t.exp[k] != 0) mask |= 1u << k;
  return mask;
}

Coeff Poly::content() const {
  Coeff g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::divided_by(const Coeff& c) const {
  if (c == 1) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return Poly();
  if (d.is_one()) return *this;
  if (d.terms_.size() == 1) {
    const Term& t = d.terms_[0];
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& x : terms_) {
      if (!mpz_divisible_p(x.coef.get_mpz_t(), t.coef.get_mpz_t())) return std::nullopt;
      Exponents e = exp_sub(x.exp, t.exp);
      if (!exp_nonneg(e)) return std::nullopt;
      r.terms_.push_back(Term{e, Coeff(x.coef / t.coef)});
    }
    return r;
  }
  // Quick degree rejection.
  for (int k = 0; k < kMaxVars; ++k)
    if (d.degree(k) > degree(k)) return std::nullopt;
  std::vector<Term> quotient;
  Poly rem = *this;
  const Term& lead = d.terms_[0];
  while (!rem.is_zero()) {
    const Term& r0 = rem.terms_[0];
    Exponents e = exp_sub(r0.exp, lead.exp);
    if (!exp_nonneg(e)) return std::nullopt;
    if (!mpz_divisible_p(r0.coef.get_mpz_t(), lead.coef.get_mpz_t())) return std::nullopt;
    Coeff c = r0.coef / lead.coef;
    rem -= d.shifted(e).scaled(c);
    quotient.push_back(Term{e, std::move(c)});
  }
  Poly q;
  q.terms_ = std::move(quotient);
  return q;
}

std::string variable_name(int var) { return var == 0 ? std::string("q") : "l" + std::to_string(var); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit_mono = t.exp == Exponents{};
    bool wrote = false;
    if (c != 1 || unit_mono) {
      os << c.get_str();
      wrote = true;
    }
    for (int k = 0; k < kMaxVars; ++k) {
      if (t.exp[k] == 0) continue;
      if (wrote) os << "*";
      os << variable_name(k);
      if (t.exp[k] != 1) os << "^" << t.exp[k];
      wrote = true;
    }
  }
  return os.str();
}

std::uint64_t eval_mod(const Poly& f, const std::array<std::uint64_t, kMaxVars>& point, std::uint64_t p) {
  using namespace detail;
  std::array<std::uint64_t, kMaxVars> inv{};
  bool need_inv = f.has_negative_exponents();
  if (need_inv)
    for (int k = 0; k < kMaxVars; ++k) inv[k] = point[k] % p == 0 ? 0 : invmod(point[k] % p, p);
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = mpz_fdiv_ui(t.coef.get_mpz_t(), p);
    for (int k = 0; k < kMaxVars && v != 0; ++k) {
      int e = t.exp[k];
      if (e > 0) v = mulmod(v, powmod(point[k], static_cast<std::uint64_t>(e), p), p);
      if (e < 0) v = mulmod(v, powmod(inv[k], static_cast<std::uint64_t>(-e), p), p);
    }
    acc = addmod(acc, v, p);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

using Dense = std::vector<std::uint64_t>;  // coefficients by ascending degree

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Univariate image of f in variable var, other variables at point.
Dense univariate_image(const Poly& f, int var, const std::array<std::uint64_t, kMaxVars>& point,
                       std::uint64_t p) {
  using namespace detail;
  Dense out(static_cast<std::size_t>(f.degree(var)) + 1, 0);
  for (const auto& t : f.terms()) {
    std::uint64_t v = mpz_fdiv_ui(t.coef.get_mpz_t(), p);
    for (int k = 0; k < kMaxVars && v != 0; ++k) {
      if (k == var || t.exp[k] == 0) continue;
      v = mulmod(v, powmod(point[k], static_cast<std::uint64_t>(t.exp[k]), p), p);
    }
    auto& slot = out[static_cast<std::size_t>(t.exp[var])];
    slot = addmod(slot, v, p);
  }
  return out;
}

std::size_t dense_gcd_degree(Dense a, Dense b, std::uint64_t p) {
  using namespace detail;
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    std::uint64_t inv_lead = invmod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t f = mulmod(a.back(), inv_lead, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = submod(a[shift + i], mulmod(f, b[i], p), p);
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

std::mt19937_64& gcd_rng() {
  thread_local std::mt19937_64 rng(0x5eed5eedULL);
  return rng;
}

enum class ModularVerdict { Coprime, Unknown };

// Rigorous coprimality test: if for every variable occurring in both inputs
// the univariate images (with non-vanishing leading coefficients) have a
// constant gcd, the true gcd is constant.
ModularVerdict modular_coprime_test(const Poly& a, const Poly& b) {
  const std::uint64_t p = detail::kMersenne61;
  unsigned common = a.variable_mask() & b.variable_mask();
  if (common == 0) return ModularVerdict::Coprime;
  std::uniform_int_distribution<std::uint64_t> dist(2, p - 1);
  for (int var = 0; var < kMaxVars; ++var) {
    if (!(common & (1u << var))) continue;
    bool decided = false;
    for (int attempt = 0; attempt < 3 && !decided; ++attempt) {
      std::array<std::uint64_t, kMaxVars> point{};
      for (auto& x : point) x = dist(gcd_rng());
      Dense ia = univariate_image(a, var, point, p);
      Dense ib = univariate_image(b, var, point, p);
      if (ia.back() == 0 || ib.back() == 0) continue;
      if (dense_gcd_degree(ia, ib, p) != 0) return ModularVerdict::Unknown;
      decided = true;
    }
    if (!decided) return ModularVerdict::Unknown;
  }
  return ModularVerdict::Coprime;
}

using Univariate = std::vector<Poly>;  // coefficients (free of var) by degree

Univariate to_univariate(const Poly& f, int var) {
  Univariate out(static_cast<std::size_t>(f.degree(var)) + 1);
  std::vector<std::vector<Term>> buckets(out.size());
  for (const auto& t : f.terms()) {
    Term u = t;
    u.exp[var] = 0;
    buckets[static_cast<std::size_t>(t.exp[var])].push_back(std::move(u));
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Poly::from_terms(std::move(buckets[i]));
  return out;
}

Poly from_univariate(const Univariate& u, int var) {
  Poly out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    Exponents e{};
    e[var] = static_cast<std::int16_t>(i);
    out += u[i].shifted(e);
  }
  return out;
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly positive_lead(Poly f) {
  if (!f.is_zero() && f.leading().coef < 0) f = -f;
  return f;
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_in(const Univariate& u) {
  Poly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? positive_lead(c) : gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Univariate divide_all(const Univariate& u, const Poly& c) {
  Univariate out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = *u[i].divide_exact(c);
  return out;
}

// Sparse pseudo-remainder of a by b in the main variable.
Univariate prem(Univariate a, const Univariate& b) {
  const Poly& lb = b.back();
  std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db && !a.empty()) {
    Poly la = a.back();
    std::size_t s = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[s + i] -= la * b[i];
    trim(a);
  }
  return a;
}

// Both inputs primitive over Z, free of monomial factors, nonconstant.
Poly gcd_primitive(const Poly& a, const Poly& b) {
  if (a == b) return positive_lead(a);
  if (modular_coprime_test(a, b) == ModularVerdict::Coprime) return Poly(1);
  if (a.size() <= b.size()) {
    if (b.divide_exact(a)) return positive_lead(a);
  } else {
    if (a.divide_exact(b)) return positive_lead(b);
  }
  unsigned common = a.variable_mask() & b.variable_mask();
  int var = -1;
  int best = 1 << 30;
  for (int k = 0; k < kMaxVars; ++k) {
    if (!(common & (1u << k))) continue;
    int score = std::max(a.degree(k), b.degree(k));
    if (score < best) {
      best = score;
      var = k;
    }
  }
  Univariate ua = to_univariate(a, var);
  Univariate ub = to_univariate(b, var);
  Poly ca = content_in(ua);
  Poly cb = content_in(ub);
  Poly g_cont = gcd_impl(ca, cb);
  ua = divide_all(ua, ca);
  ub = divide_all(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    Univariate r = prem(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = Univariate{Poly(1)};
      break;
    }
    ua = std::move(ub);
    ub = divide_all(r, content_in(r));
  }
  Poly g = from_univariate(divide_all(ub, content_in(ub)), var);
  return positive_lead(g * g_cont);
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  Exponents ma = a.min_exponents();
  Exponents mb = b.min_exponents();
  Exponents common = exp_min(ma, mb);
  Coeff ga = a.content();
  Coeff gb = b.content();
  Coeff g_int;
  mpz_gcd(g_int.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
  Poly mono = Poly::monomial(common, g_int);
  if (a.is_monomial() || b.is_monomial()) return mono;
  Poly pa = a.shifted(exp_neg(ma)).divided_by(ga);
  Poly pb = b.shifted(exp_neg(mb)).divided_by(gb);
  if (pa.is_constant() || pb.is_constant()) return mono;
  return positive_lead(gcd_primitive(pa, pb) * mono);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

}  // namespace aksw
