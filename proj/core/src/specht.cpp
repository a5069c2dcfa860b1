#include "aksw/specht.hpp"

#include <algorithm>

#include "aksw/error.hpp"

namespace aksw {

HeckeParameters<RatFun> generic_hecke_parameters(int d) {
  HeckeParameters<RatFun> p{RatFun::q(), {}};
  for (int c = 1; c <= d; ++c) p.u.push_back(RatFun::lambda(c));
  return p;
}

HeckeParameters<Fp> specialize_parameters(const HeckeParameters<RatFun>& p, const ParamAssignment& at) {
  HeckeParameters<Fp> r{specialize_mod(p.q, at), {}};
  for (const auto& u : p.u) r.u.push_back(specialize_mod(u, at));
  return r;
}

template <class F>
F box_content(const Box& b, const HeckeParameters<F>& p) {
  return p.u[static_cast<std::size_t>(b.comp - 1)] * p.q.pow(2L * (b.col - b.row));
}

template RatFun box_content(const Box&, const HeckeParameters<RatFun>&);
template Fp box_content(const Box&, const HeckeParameters<Fp>&);

template <class F>
SpechtModule<F>::SpechtModule(MultiPartition mu, HeckeParameters<F> params)
    : shape_(std::move(mu)), params_(std::move(params)) {
  if (shape_.d() != params_.d()) throw Error("shape has " + std::to_string(shape_.d()) + " components, parameters " +
                                             std::to_string(params_.d()));
  basis_ = standard_tableaux(shape_);
  const std::size_t dim = basis_.size();
  const int n = shape_.size();
  spectrum_.reserve(dim);
  for (const auto& t : basis_) {
    std::vector<F> ev;
    for (const Box& b : t.path) ev.push_back(box_content(b, params_));
    spectrum_.push_back(std::move(ev));
  }
  if (n == 0) return;
  const F q = params_.q;
  const F qi = F(1) / q;
  const F qdiff = q - qi;

  Matrix<F> t0(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) t0(k, k) = params_.u[static_cast<std::size_t>(basis_[k].path[0].comp - 1)];
  gens_.push_back(std::move(t0));

  for (int i = 1; i < n; ++i) {
    Matrix<F> ti(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const StandardTableau& t = basis_[k];
      const Box& bi = t.path[static_cast<std::size_t>(i - 1)];
      const Box& bj = t.path[static_cast<std::size_t>(i)];
      if (bi.comp == bj.comp && bi.row == bj.row) {
        ti(k, k) = q;
        continue;
      }
      if (bi.comp == bj.comp && bi.col == bj.col) {
        ti(k, k) = -qi;
        continue;
      }
      if (!reading_before(bi, bj)) continue;  // filled from the lower partner
      std::size_t s = tableau_index(basis_, *swap_entries(t, i));
      const F& a = spectrum_[k][static_cast<std::size_t>(i - 1)];
      const F& b = spectrum_[k][static_cast<std::size_t>(i)];
      F diff = b - a;
      if (is_zero(diff))
        throw DegenerateParameters("equal contents at entries " + std::to_string(i) + "," + std::to_string(i + 1) +
                                   " of tableau " + t.to_string());
      ti(k, k) = qdiff * b / diff;
      ti(s, k) = F(1);
      ti(k, s) = (q * b - qi * a) * (qi * b - q * a) / (diff * diff);
      ti(s, s) = -(qdiff * a / diff);
    }
    gens_.push_back(std::move(ti));
  }
}

template <class F>
Matrix<F> SpechtModule<F>::X(int i) const {
  Matrix<F> x(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) x(k, k) = spectrum_[k][static_cast<std::size_t>(i - 1)];
  return x;
}

template class SpechtModule<RatFun>;
template class SpechtModule<Fp>;

template <class F>
std::vector<RelationCheck> check_hecke_relations(const std::vector<Matrix<F>>& gens, const HeckeParameters<F>& p) {
  std::vector<RelationCheck> out;
  if (gens.empty()) return out;
  const std::size_t dim = gens[0].rows();
  const Matrix<F> id = Matrix<F>::identity(dim);
  const F q = p.q;
  const F qi = F(1) / q;
  const int n = static_cast<int>(gens.size());
  {
    Matrix<F> prod = id;
    for (const F& u : p.u) prod = prod * (gens[0] - u * id);
    out.push_back({"cyclotomic T0", prod.is_zero()});
  }
  for (int i = 1; i < n; ++i) {
    const auto& t = gens[static_cast<std::size_t>(i)];
    out.push_back({"quadratic T" + std::to_string(i), ((t - q * id) * (t + qi * id)).is_zero()});
  }
  if (n >= 2) {
    const auto& t0 = gens[0];
    const auto& t1 = gens[1];
    out.push_back({"braid T0T1T0T1", t0 * t1 * t0 * t1 == t1 * t0 * t1 * t0});
  }
  for (int i = 1; i + 1 < n; ++i) {
    const auto& a = gens[static_cast<std::size_t>(i)];
    const auto& b = gens[static_cast<std::size_t>(i + 1)];
    out.push_back({"braid T" + std::to_string(i) + "T" + std::to_string(i + 1), a * b * a == b * a * b});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      const auto& a = gens[static_cast<std::size_t>(i)];
      const auto& b = gens[static_cast<std::size_t>(j)];
      out.push_back({"commute T" + std::to_string(i) + "T" + std::to_string(j), a * b == b * a});
    }
  return out;
}

template std::vector<RelationCheck> check_hecke_relations(const std::vector<Matrix<RatFun>>&,
                                                          const HeckeParameters<RatFun>&);
template std::vector<RelationCheck> check_hecke_relations(const std::vector<Matrix<Fp>>&, const HeckeParameters<Fp>&);

template <class F>
std::vector<Matrix<F>> jucys_murphy_recursive(const std::vector<Matrix<F>>& gens) {
  std::vector<Matrix<F>> xs;
  if (gens.empty()) return xs;
  xs.push_back(gens[0]);
  for (std::size_t i = 1; i < gens.size(); ++i) xs.push_back(gens[i] * xs.back() * gens[i]);
  return xs;
}

template std::vector<Matrix<RatFun>> jucys_murphy_recursive(const std::vector<Matrix<RatFun>>&);
template std::vector<Matrix<Fp>> jucys_murphy_recursive(const std::vector<Matrix<Fp>>&);

template <class F>
std::vector<MultiPartition> restrict_check(const MultiPartition& mu, const HeckeParameters<F>& p) {
  const int n = mu.size();
  if (n < 1) throw Error("restriction needs a nonempty shape");
  SpechtModule<F> v(mu, p);
  std::vector<std::vector<F>> remaining;
  for (const auto& ev : v.spectrum()) {
    if (std::count(v.spectrum().begin(), v.spectrum().end(), ev) > 1)
      throw DegenerateParameters("spectrum collision inside " + mu.to_string());
    remaining.emplace_back(ev.begin(), ev.end() - 1);
  }
  std::vector<MultiPartition> out;
  for (const auto& nu : multipartitions(mu.d(), n - 1)) {
    SpechtModule<F> w(nu, p);
    std::size_t hits = 0;
    for (const auto& ev : w.spectrum()) hits += std::count(remaining.begin(), remaining.end(), ev) ? 1 : 0;
    if (hits == 0) continue;
    if (hits != w.dim())
      throw DegenerateParameters("partial spectrum match between " + mu.to_string() + " and " + nu.to_string());
    for (const auto& ev : w.spectrum()) remaining.erase(std::find(remaining.begin(), remaining.end(), ev));
    out.push_back(nu);
  }
  if (!remaining.empty()) throw DegenerateParameters("unmatched spectra restricting " + mu.to_string());
  return out;
}

template std::vector<MultiPartition> restrict_check(const MultiPartition&, const HeckeParameters<RatFun>&);
template std::vector<MultiPartition> restrict_check(const MultiPartition&, const HeckeParameters<Fp>&);

}  // namespace aksw
