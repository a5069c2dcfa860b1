#include "aksw/ariki_koike.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "aksw/error.hpp"
#include "aksw/linalg.hpp"

namespace aksw {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += "T" + std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'T' ||
        !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad generator '" + tok + "' in word '" + std::string(text) + "'");
    w.push_back(std::stoi(tok.substr(1)));
  }
  return w;
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::scalar(const RatFun& c) { return word({}, c); }

AlgebraElement AlgebraElement::word(const Word& w, const RatFun& c) {
  AlgebraElement x;
  if (!c.is_zero()) x.terms_.emplace(w, c);
  return x;
}

int AlgebraElement::max_letter() const {
  int m = -1;
  for (const auto& [w, c] : terms_)
    for (int l : w) m = std::max(m, l);
  return m;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += RatFun(-1) * o; }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += AlgebraElement::word(w, ca * cb);
    }
  return out;
}

AlgebraElement operator*(const RatFun& c, const AlgebraElement& a) {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, x] : a.terms_) out.terms_.emplace(w, c * x);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*[" + word_to_string(w) + "]";
  }
  return out;
}

Word jm_word(int i) {
  Word w;
  for (int k = i - 1; k >= 1; --k) w.push_back(k);
  w.push_back(0);
  for (int k = 1; k <= i - 1; ++k) w.push_back(k);
  return w;
}

std::vector<AlgebraElement> ak_basis_words(int d, int n) {
  std::vector<Word> perms;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    // Bubble sort records a reduced word, one letter per removed inversion.
    std::vector<int> x = w;
    Word red;
    while (true) {
      std::size_t i = 0;
      while (i + 1 < x.size() && x[i] < x[i + 1]) ++i;
      if (i + 1 >= x.size()) break;
      std::swap(x[i], x[i + 1]);
      red.push_back(static_cast<int>(i) + 1);
    }
    perms.push_back(red);
  } while (std::next_permutation(w.begin(), w.end()));

  std::vector<AlgebraElement> out;
  std::vector<int> r(static_cast<std::size_t>(n), 0);
  while (true) {
    Word prefix;
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k < r[static_cast<std::size_t>(i - 1)]; ++k) {
        Word x = jm_word(i);
        prefix.insert(prefix.end(), x.begin(), x.end());
      }
    for (const auto& p : perms) {
      Word full = prefix;
      full.insert(full.end(), p.begin(), p.end());
      out.push_back(AlgebraElement::word(full));
    }
    std::size_t pos = 0;
    while (pos < r.size() && ++r[pos] == d) r[pos++] = 0;
    if (pos == r.size()) break;
  }
  return out;
}

AlgebraElement tau_element(int d, int n, const std::vector<RatFun>& u, const RatFun& q) {
  if (d < 2 || n < 2) throw Error("tau needs d >= 2 and n >= 2");
  AlgebraElement t1q = AlgebraElement::generator(1) - AlgebraElement::scalar(q);
  RatFun qsum = q + q.inverse();
  AlgebraElement out = AlgebraElement::one();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      AlgebraElement mid = AlgebraElement::generator(0) -
                           AlgebraElement::scalar(q * (u[static_cast<std::size_t>(i)] + u[static_cast<std::size_t>(j)]) / qsum);
      out = out * t1q * mid * t1q;
    }
  return out;
}

AlgebraElement reljm_element(int d, const std::vector<RatFun>& u, const RatFun& q) {
  AlgebraElement x12 = AlgebraElement::word(jm_word(1)) + AlgebraElement::word(jm_word(2));
  AlgebraElement out = AlgebraElement::generator(1) - AlgebraElement::scalar(q);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      out = out * (x12 - AlgebraElement::scalar(u[static_cast<std::size_t>(i)] + u[static_cast<std::size_t>(j)]));
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
bool blocks_zero(const BlockMatrix<F>& m) {
  return std::all_of(m.begin(), m.end(), [](const Matrix<F>& b) { return b.is_zero(); });
}

template <class F>
BlockMatrix<F> blocks_mul(const BlockMatrix<F>& a, const BlockMatrix<F>& b) {
  BlockMatrix<F> out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] * b[k]);
  return out;
}

template <class F>
std::vector<F> blocks_flatten(const BlockMatrix<F>& m) {
  std::vector<F> v;
  for (const auto& b : m)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
  return v;
}

template bool blocks_zero(const BlockMatrix<RatFun>&);
template bool blocks_zero(const BlockMatrix<Fp>&);
template BlockMatrix<RatFun> blocks_mul(const BlockMatrix<RatFun>&, const BlockMatrix<RatFun>&);
template BlockMatrix<Fp> blocks_mul(const BlockMatrix<Fp>&, const BlockMatrix<Fp>&);
template std::vector<RatFun> blocks_flatten(const BlockMatrix<RatFun>&);
template std::vector<Fp> blocks_flatten(const BlockMatrix<Fp>&);

template <class F>
RegularRepresentation<F>::RegularRepresentation(int d, int n, HeckeParameters<F> params, Converter convert)
    : d_(d), n_(n), params_(std::move(params)), convert_(std::move(convert)) {
  if (d < 1 || n < 1) throw Error("H(d,n) needs d >= 1 and n >= 1");
  shapes_ = multipartitions(d, n);
  for (const auto& mu : shapes_) modules_.emplace_back(mu, params_);
}

template <class F>
std::vector<std::size_t> RegularRepresentation<F>::block_dims() const {
  std::vector<std::size_t> dims;
  for (const auto& m : modules_) dims.push_back(m.dim());
  return dims;
}

template <class F>
std::size_t RegularRepresentation<F>::algebra_dim() const {
  std::size_t s = 0;
  for (const auto& m : modules_) s += m.dim() * m.dim();
  return s;
}

template <class F>
BlockMatrix<F> RegularRepresentation<F>::identity() const {
  BlockMatrix<F> out;
  for (const auto& m : modules_) out.push_back(Matrix<F>::identity(m.dim()));
  return out;
}

template <class F>
BlockMatrix<F> RegularRepresentation<F>::generator(int i) const {
  if (i < 0 || i >= n_) throw Error("generator T" + std::to_string(i) + " out of range for n=" + std::to_string(n_));
  BlockMatrix<F> out;
  for (const auto& m : modules_) out.push_back(m.T(i));
  return out;
}

template <class F>
BlockMatrix<F> RegularRepresentation<F>::rho_word(const Word& w) const {
  BlockMatrix<F> out = identity();
  for (int letter : w) out = blocks_mul(out, generator(letter));
  return out;
}

template <class F>
BlockMatrix<F> RegularRepresentation<F>::rho(const AlgebraElement& x) const {
  BlockMatrix<F> out;
  for (const auto& m : modules_) out.emplace_back(m.dim(), m.dim());
  for (const auto& [w, c] : x.terms()) {
    BlockMatrix<F> img = rho_word(w);
    F s = convert_(c);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += s * img[k];
  }
  return out;
}

template class RegularRepresentation<RatFun>;
template class RegularRepresentation<Fp>;

ArikiKoike::ArikiKoike(int d, int n, std::uint64_t seed)
    : d_(d), n_(n), point_(ParamAssignment::random_modular(Fp::modulus(), seed)) {
  auto generic = generic_hecke_parameters(d);
  exact_ = std::make_unique<RegularRepresentation<RatFun>>(d, n, generic, [](const RatFun& x) { return x; });
  ParamAssignment at = point_;
  modular_ = std::make_unique<RegularRepresentation<Fp>>(d, n, specialize_parameters(generic, at),
                                                         [at](const RatFun& x) { return specialize_mod(x, at); });
}

// ---------------------------------------------------------------------------

std::size_t BlockSubspace::rank() const {
  std::size_t r = 0;
  for (std::size_t k = 0; k < support.size(); ++k)
    if (support[k]) r += block_dims[k] * block_dims[k];
  return r;
}

std::vector<BlockMatrix<RatFun>> BlockSubspace::echelon_basis() const {
  std::vector<BlockMatrix<RatFun>> out;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (!support[k]) continue;
    for (std::size_t i = 0; i < block_dims[k]; ++i)
      for (std::size_t j = 0; j < block_dims[k]; ++j) {
        BlockMatrix<RatFun> unit;
        for (auto dim : block_dims) unit.emplace_back(dim, dim);
        unit[k](i, j) = RatFun(1);
        out.push_back(std::move(unit));
      }
  }
  return out;
}

std::size_t basis_rank(const ArikiKoike& ak) {
  const auto& rep = ak.modular();
  IncrementalSpan<Fp> span(rep.algebra_dim());
  for (const auto& b : ak_basis_words(ak.d(), ak.n())) span.add(blocks_flatten(rep.rho(b)));
  return span.rank();
}

IncrementalSpan<Fp> ideal_closure(const RegularRepresentation<Fp>& rep, const std::vector<AlgebraElement>& gens) {
  IncrementalSpan<Fp> span(rep.algebra_dim());
  std::vector<BlockMatrix<Fp>> queue;
  for (const auto& g : gens) {
    BlockMatrix<Fp> img = rep.rho(g);
    if (span.add(blocks_flatten(img))) queue.push_back(std::move(img));
  }
  std::vector<BlockMatrix<Fp>> gen_imgs;
  for (int i = 0; i < rep.n(); ++i) gen_imgs.push_back(rep.generator(i));
  while (!queue.empty()) {
    BlockMatrix<Fp> m = std::move(queue.back());
    queue.pop_back();
    for (const auto& t : gen_imgs) {
      for (auto next : {blocks_mul(t, m), blocks_mul(m, t)})
        if (span.add(blocks_flatten(next))) queue.push_back(std::move(next));
    }
  }
  return span;
}

IdealSpan ideal_span(const ArikiKoike& ak, const std::vector<AlgebraElement>& gens) {
  IdealSpan out;
  const auto& ex = ak.exact();
  out.subspace.block_dims = ex.block_dims();
  out.subspace.support.assign(ex.blocks(), false);
  for (const auto& g : gens) {
    BlockMatrix<RatFun> img = ex.rho(g);
    for (std::size_t k = 0; k < img.size(); ++k)
      if (!img[k].is_zero()) out.subspace.support[k] = true;
  }
  IncrementalSpan<Fp> span = ideal_closure(ak.modular(), gens);
  out.closure_rank = span.rank();
  return out;
}

RowQuotientKernel row_quotient_kernel(const ArikiKoike& ak, const std::vector<int>& bounds) {
  if (static_cast<int>(bounds.size()) != ak.d()) throw Error("row bounds must have d entries");
  RowQuotientKernel out;
  const auto& md = ak.modular();
  out.subspace.block_dims = md.block_dims();
  std::vector<bool> inside;
  for (const auto& mu : md.shapes()) {
    inside.push_back(mu.fits(bounds));
    out.subspace.support.push_back(!inside.back());
  }
  std::size_t projected_len = 0;
  for (std::size_t k = 0; k < inside.size(); ++k)
    if (inside[k]) projected_len += out.subspace.block_dims[k] * out.subspace.block_dims[k];
  IncrementalSpan<Fp> full(md.algebra_dim());
  IncrementalSpan<Fp> projected(projected_len);
  for (const auto& b : ak_basis_words(ak.d(), ak.n())) {
    BlockMatrix<Fp> img = md.rho(b);
    full.add(blocks_flatten(img));
    BlockMatrix<Fp> kept;
    for (std::size_t k = 0; k < img.size(); ++k)
      if (inside[k]) kept.push_back(img[k]);
    projected.add(blocks_flatten(kept));
  }
  out.image_rank = full.rank();
  out.projected_rank = projected.rank();
  return out;
}

namespace {

std::string describe_support_difference(const ArikiKoike& ak, const BlockSubspace& a, const BlockSubspace& b,
                                        const std::string& name_a, const std::string& name_b) {
  for (std::size_t k = 0; k < a.support.size(); ++k)
    if (a.support[k] != b.support[k])
      return "block " + ak.exact().shapes()[k].to_string() + ": " + (a.support[k] ? name_a : name_b) +
             " contains End(V) but " + (a.support[k] ? name_b : name_a) + " does not";
  return {};
}

}  // namespace

BlobCertificate blob_theorem_check(const ArikiKoike& ak) {
  if (ak.d() < 2) throw Error("the blob theorem needs d >= 2");
  if (ak.n() < 2) throw Error("the blob theorem needs n >= 2");
  BlobCertificate c;
  const auto& u = ak.u();
  RatFun q = ak.q();
  bool separated = true;
  RatFun factor = RatFun(1) + q.pow(-2);
  for (const auto& uk : u)
    for (const auto& ui : u)
      for (const auto& uj : u) separated = separated && !(factor * uk - ui - uj).is_zero();
  c.hypotheses = separated && !ariki_criterion(ak.n(), u, q).is_zero();
  c.tau = ideal_span(ak, {tau_element(ak.d(), ak.n(), u, q)});
  c.reljm = ideal_span(ak, {reljm_element(ak.d(), u, q)});
  c.kernel = row_quotient_kernel(ak, std::vector<int>(static_cast<std::size_t>(ak.d()), 1));
  c.tau_equals_kernel = c.tau.subspace == c.kernel.subspace;
  c.reljm_equals_tau = c.reljm.subspace == c.tau.subspace;
  if (!c.tau_equals_kernel)
    c.witness = describe_support_difference(ak, c.tau.subspace, c.kernel.subspace, "ideal(tau)", "kernel");
  else if (!c.reljm_equals_tau)
    c.witness = describe_support_difference(ak, c.reljm.subspace, c.tau.subspace, "ideal(relJM)", "ideal(tau)");
  return c;
}

std::vector<RelationCheck> reljm_identity_check(const ArikiKoike& ak) {
  std::vector<RelationCheck> out;
  const auto& u = ak.u();
  RatFun q = ak.q();
  AlgebraElement t1q = AlgebraElement::generator(1) - AlgebraElement::scalar(q);
  AlgebraElement x12 = AlgebraElement::word(jm_word(1)) + AlgebraElement::word(jm_word(2));
  for (int i = 0; i < ak.d(); ++i)
    for (int j = i + 1; j < ak.d(); ++j) {
      RatFun s = u[static_cast<std::size_t>(i)] + u[static_cast<std::size_t>(j)];
      AlgebraElement lhs = t1q * (AlgebraElement::generator(0) - AlgebraElement::scalar(q * s / (q + q.inverse()))) * t1q;
      // The product expands to -q(X1+X2-s)(T1-q); the overall sign does not
      // affect the ideal.
      AlgebraElement rhs = (-q) * ((x12 - AlgebraElement::scalar(s)) * t1q);
      auto a = ak.exact().rho(lhs);
      auto b = ak.exact().rho(rhs);
      out.push_back({"relJM u" + std::to_string(i + 1) + ",u" + std::to_string(j + 1), a == b});
    }
  return out;
}

std::vector<TauAction> action_tau(const ArikiKoike& ak) {
  std::vector<TauAction> out;
  auto img = ak.exact().rho(tau_element(ak.d(), ak.n(), ak.u(), ak.q()));
  for (std::size_t k = 0; k < img.size(); ++k) {
    const auto& mu = ak.exact().shapes()[k];
    bool single = true;
    for (const auto& p : mu.components()) single = single && p.size() <= 1;
    out.push_back({mu, img[k].is_zero(), single});
  }
  return out;
}

std::vector<RelationCheck> center_check(const ArikiKoike& ak) {
  const auto& ex = ak.exact();
  const int n = ak.n();
  std::vector<BlockMatrix<RatFun>> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(ex.rho_word(jm_word(i)));
  // e[k] = e_k(X_1..X_i), updated one variable at a time.
  std::vector<BlockMatrix<RatFun>> e(static_cast<std::size_t>(n) + 1);
  BlockMatrix<RatFun> zero;
  for (auto dim : ex.block_dims()) zero.emplace_back(dim, dim);
  e[0] = ex.identity();
  for (int k = 1; k <= n; ++k) e[static_cast<std::size_t>(k)] = zero;
  for (int i = 1; i <= n; ++i)
    for (int k = i; k >= 1; --k) {
      auto prod = blocks_mul(e[static_cast<std::size_t>(k - 1)], xs[static_cast<std::size_t>(i - 1)]);
      for (std::size_t b = 0; b < prod.size(); ++b) e[static_cast<std::size_t>(k)][b] += prod[b];
    }
  std::vector<RelationCheck> out;
  for (int k = 1; k <= n; ++k) {
    const auto& ek = e[static_cast<std::size_t>(k)];
    bool commutes = true;
    for (int i = 0; i < n; ++i) {
      auto t = ex.generator(i);
      commutes = commutes && blocks_mul(ek, t) == blocks_mul(t, ek);
    }
    bool scalar = true;
    for (const auto& blk : ek) {
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t s = 0; s < blk.cols(); ++s)
          scalar = scalar && (r == s ? blk(r, s) == blk(0, 0) : blk(r, s).is_zero());
    }
    out.push_back({"e" + std::to_string(k) + " commutes with all T_i", commutes});
    out.push_back({"e" + std::to_string(k) + " scalar on every block", scalar});
  }
  return out;
}

RatFun ariki_criterion(int n, const std::vector<RatFun>& u, const RatFun& q) {
  RatFun out(1);
  const std::size_t d = u.size();
  for (int l = -n + 1; l <= n - 1; ++l)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) out *= q.pow(2L * l) * u[i] - u[j];
  RatFun q2 = q * q;
  for (int i = 1; i <= n; ++i) {
    RatFun s(0);
    RatFun p(1);
    for (int k = 0; k < i; ++k) {
      s += p;
      p *= q2;
    }
    out *= s;
  }
  return out;
}

}  // namespace aksw
