#include "aksw/braiding.hpp"

#include <algorithm>
#include <set>

#include "aksw/ariki_koike.hpp"
#include "aksw/error.hpp"
#include "aksw/ground.hpp"
#include "aksw/linalg.hpp"

namespace aksw {

namespace {

std::size_t space_dim(const std::vector<TensorComponent>& comps) {
  std::size_t s = 0;
  for (const auto& c : comps) s += c.da * c.db;
  return s;
}

RatFun qint(std::int64_t k) { return quantum_integer(Ground<RatFun>{}, LinearForm::integer(k)); }

// One truncated exponential for the root eps_i - eps_j.
Matrix<RatFun> theta_factor(const WeightModule& a, const WeightModule& b, const Weight& w, int i, int j,
                            RootConvention conv) {
  auto comps = tensor_components(a, b, w);
  Matrix<RatFun> out = Matrix<RatFun>::identity(space_dim(comps));
  std::map<Weight, const TensorComponent*> by_a;
  for (const auto& c : comps) by_a[c.wa] = &c;
  const Weight al = Weight::root(a.m(), i, j);
  const RatFun q = RatFun::q();
  const RatFun qq = q - q.inverse();
  for (const auto& s : comps) {
    Matrix<RatFun> epow = Matrix<RatFun>::identity(s.db);
    Matrix<RatFun> fpow = Matrix<RatFun>::identity(s.da);
    RatFun coef(1);
    for (std::int64_t k = 1;; ++k) {
      epow = root_e(b, i, j, s.wb + (k - 1) * al, conv) * epow;
      if (epow.rows() == 0 || epow.is_zero()) break;
      fpow = root_f(a, i, j, s.wa - (k - 1) * al, conv) * fpow;
      if (fpow.rows() == 0 || fpow.is_zero()) break;
      // q^{k(k-1)/2} (q-q^-1)^k / [k]!, built incrementally.
      coef = coef * q.pow(k - 1) * qq / qint(k);
      auto it = by_a.find(s.wa - k * al);
      if (it == by_a.end()) throw Error("theta: missing tensor component below " + s.wa.to_string());
      const auto& t = *it->second;
      for (std::size_t x = 0; x < t.da; ++x)
        for (std::size_t ia = 0; ia < s.da; ++ia) {
          if (fpow(x, ia).is_zero()) continue;
          RatFun fx = coef * fpow(x, ia);
          for (std::size_t y = 0; y < t.db; ++y)
            for (std::size_t ib = 0; ib < s.db; ++ib)
              if (!epow(y, ib).is_zero()) out(t.offset + x * t.db + y, s.offset + ia * s.db + ib) += fx * epow(y, ib);
        }
    }
  }
  return out;
}

}  // namespace

Matrix<RatFun> theta_matrix(const WeightModule& a, const WeightModule& b, const Weight& w, RootConvention conv) {
  const int m = a.m();
  Matrix<RatFun> out = Matrix<RatFun>::identity(space_dim(tensor_components(a, b, w)));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out = out * theta_factor(a, b, w, i, j, conv);
  return out;
}

std::vector<RatFun> theta_apply(const WeightModule& a, const WeightModule& b, const Weight& w,
                                const std::vector<RatFun>& v, RootConvention conv) {
  Matrix<RatFun> t = theta_matrix(a, b, w, conv);
  if (t.cols() != v.size()) throw Error("theta_apply: vector length does not match the weight space");
  Matrix<RatFun> col(v.size(), 1);
  for (std::size_t k = 0; k < v.size(); ++k) col(k, 0) = v[k];
  Matrix<RatFun> r = t * col;
  std::vector<RatFun> out(r.rows());
  for (std::size_t k = 0; k < r.rows(); ++k) out[k] = r(k, 0);
  return out;
}

Matrix<RatFun> weight_pairing_scalar(const WeightModule& a, const WeightModule& b, const Weight& w) {
  auto comps = tensor_components(a, b, w);
  Matrix<RatFun> out(space_dim(comps), space_dim(comps));
  for (const auto& c : comps) {
    RatFun s = q_power(pair(c.wa, c.wb));
    for (std::size_t k = 0; k < c.da * c.db; ++k) out(c.offset + k, c.offset + k) = s;
  }
  return out;
}

Matrix<RatFun> flip(const WeightModule& a, const WeightModule& b, const Weight& w) {
  auto src = tensor_components(a, b, w);
  auto tgt = tensor_components(b, a, w);
  std::map<Weight, const TensorComponent*> by_first;
  for (const auto& t : tgt) by_first[t.wa] = &t;
  Matrix<RatFun> out(space_dim(tgt), space_dim(src));
  for (const auto& s : src) {
    const auto& t = *by_first.at(s.wb);
    for (std::size_t ia = 0; ia < s.da; ++ia)
      for (std::size_t ib = 0; ib < s.db; ++ib) out(t.offset + ib * t.db + ia, s.offset + ia * s.db + ib) = RatFun(1);
  }
  return out;
}

Matrix<RatFun> braiding_map(const WeightModule& a, const WeightModule& b, const Weight& w, RootConvention conv) {
  Matrix<RatFun> ft = theta_matrix(a, b, w, conv);
  for (const auto& c : tensor_components(a, b, w)) {
    RatFun s = q_power(pair(c.wa, c.wb));
    for (std::size_t k = 0; k < c.da * c.db; ++k)
      for (std::size_t col = 0; col < ft.cols(); ++col)
        if (!ft(c.offset + k, col).is_zero()) ft(c.offset + k, col) = s * ft(c.offset + k, col);
  }
  return flip(a, b, w) * ft;
}

std::optional<std::string> braiding_morphism_defect(const ModulePtr& a, const ModulePtr& b, RootConvention conv) {
  TensorModule ab(a, b);
  TensorModule ba(b, a);
  std::map<Weight, std::optional<Matrix<RatFun>>> cache;
  auto c = [&](const Weight& w) -> const std::optional<Matrix<RatFun>>& {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    std::optional<Matrix<RatFun>> m;
    try {
      m = braiding_map(*a, *b, w, conv);
    } catch (const TruncationEscape&) {
    }
    return cache.emplace(w, std::move(m)).first->second;
  };
  const int m = ab.m();
  for (const auto& w : ab.weights()) {
    const auto& cw = c(w);
    if (!cw) continue;
    for (int i = 1; i < m; ++i) {
      const Weight al = Weight::alpha(m, i);
      if (const auto& up = c(w + al); up) {
        if (!(*up * ab.e(i, w) == ba.e(i, w) * *cw)) return "E" + std::to_string(i) + " at " + w.to_string();
      }
      if (const auto& down = c(w - al); down) {
        try {
          if (!(*down * ab.f(i, w) == ba.f(i, w) * *cw)) return "F" + std::to_string(i) + " at " + w.to_string();
        } catch (const TruncationEscape&) {
        }
      }
    }
  }
  return std::nullopt;
}

RelationCheck braiding_table_check(int m) {
  StandardModule v(m);
  const RatFun q = RatFun::q();
  bool ok = true;
  for (int a = 1; a <= m; ++a)
    for (int b = a; b <= m; ++b) {
      const Weight w = Weight::eps(m, a) + Weight::eps(m, b);
      auto comps = tensor_components(v, v, w);
      Matrix<RatFun> c = braiding_map(v, v, w);
      // Index of v_x (x) v_y in the weight space.
      auto at = [&](int x, int y) -> std::size_t {
        for (const auto& t : comps)
          if (v.index(t.wa) == x && v.index(t.wb) == y) return t.offset;
        throw Error("braiding table: missing basis vector");
      };
      Matrix<RatFun> expect(c.rows(), c.cols());
      for (const auto& s : comps) {
        int x = v.index(s.wa), y = v.index(s.wb);
        if (x == y) {
          expect(at(x, x), s.offset) = q;
        } else {
          expect(at(y, x), s.offset) = RatFun(1);
          if (x < y) expect(at(x, y), s.offset) = q - q.inverse();
        }
      }
      ok = ok && c == expect;
    }
  return {"c_VV table m=" + std::to_string(m), ok};
}

// ---------------------------------------------------------------------------

BraidAction::BraidAction(std::vector<int> levi, int n, RootConvention conv) : levi_(std::move(levi)), n_(n), conv_(conv) {
  if (levi_.empty() || n < 1) throw Error("braid action needs a nonempty Levi and n >= 1");
  m_ = 0;
  for (int b : levi_) {
    if (b < 1) throw Error("Levi block sizes must be positive");
    m_ += b;
  }
  verma_ = std::make_shared<ParabolicVerma>(levi_, n * (m_ - 1) + 1);
  v_ = std::make_shared<StandardModule>(m_);
  space_ = std::make_shared<TensorPowerModule>(verma_, n);

  params_.q = RatFun::q();
  int mt = 0;
  for (std::size_t i = 0; i < levi_.size(); ++i) {
    RatFun l = RatFun::lambda(static_cast<int>(i) + 1);
    params_.u.push_back(l * l * RatFun::q().pow(-2 * mt));
    mt += levi_[i];
  }

  std::vector<int> t(static_cast<std::size_t>(n), 1);
  while (true) {
    tracked_.push_back(verma_->top() + space_->slot_weight(t));
    int p = n - 1;
    while (p >= 0 && t[static_cast<std::size_t>(p)] == m_) --p;
    if (p < 0) break;
    int next = ++t[static_cast<std::size_t>(p)];
    for (int k = p + 1; k < n; ++k) t[static_cast<std::size_t>(k)] = next;
  }

  for (int a = 1; a <= m_; ++a)
    for (int b = 1; b <= m_; ++b) {
      const Weight w = Weight::eps(m_, a) + Weight::eps(m_, b);
      auto comps = tensor_components(*v_, *v_, w);
      Matrix<RatFun> c = braiding_map(*v_, *v_, w, conv_);
      for (const auto& s : comps) {
        if (v_->index(s.wa) != a) continue;
        auto& out = cvv_[{a, b}];
        for (const auto& t2 : comps)
          if (!c(t2.offset, s.offset).is_zero())
            out.push_back({{v_->index(t2.wa), v_->index(t2.wb)}, c(t2.offset, s.offset)});
      }
    }
}

const Matrix<RatFun>& BraidAction::double_braiding(const Weight& w) const {
  auto it = double_cache_.find(w);
  if (it != double_cache_.end()) return it->second;
  Matrix<RatFun> c1 = braiding_map(*verma_, *v_, w, conv_);
  Matrix<RatFun> c2 = braiding_map(*v_, *verma_, w, conv_);
  return double_cache_.emplace(w, c2 * c1).first->second;
}

const Matrix<RatFun>& BraidAction::R(int i, const Weight& w) const {
  if (i < 0 || i >= n_) throw Error("braid operator index out of range");
  auto key = std::make_pair(i, w);
  auto it = r_cache_.find(key);
  if (it != r_cache_.end()) return it->second;

  auto entries = space_->entries(w);
  std::map<std::vector<int>, const TensorPowerModule::Entry*> by_slots;
  std::size_t dim = 0;
  for (const auto& e : entries) {
    by_slots[e.slots] = &e;
    dim += e.dm;
  }
  Matrix<RatFun> out(dim, dim);
  if (i == 0) {
    for (const auto& e : entries) {
      const int j = e.slots[0];
      const Weight w2 = e.wm + Weight::eps(m_, j);
      const Matrix<RatFun>& db = double_braiding(w2);
      auto comps = tensor_components(*verma_, *v_, w2);
      const TensorComponent* src = nullptr;
      for (const auto& c : comps)
        if (c.wa == e.wm) src = &c;
      for (const auto& t : comps) {
        auto slots = e.slots;
        slots[0] = v_->index(t.wb);
        const auto& te = *by_slots.at(slots);
        for (std::size_t x = 0; x < t.da; ++x)
          for (std::size_t y = 0; y < e.dm; ++y) out(te.offset + x, e.offset + y) = db(t.offset + x, src->offset + y);
      }
    }
  } else {
    const auto p = static_cast<std::size_t>(i);
    for (const auto& e : entries) {
      for (const auto& [ab, coef] : cvv_.at({e.slots[p - 1], e.slots[p]})) {
        auto slots = e.slots;
        slots[p - 1] = ab.first;
        slots[p] = ab.second;
        const auto& te = *by_slots.at(slots);
        for (std::size_t y = 0; y < e.dm; ++y) out(te.offset + y, e.offset + y) += coef;
      }
    }
  }
  return r_cache_.emplace(key, std::move(out)).first->second;
}

std::vector<Matrix<RatFun>> BraidAction::operators(const Weight& w) const {
  std::vector<Matrix<RatFun>> out;
  for (int i = 0; i < n_; ++i) out.push_back(R(i, w));
  return out;
}

std::vector<Matrix<RatFun>> jucys_murphy_action(const std::vector<Matrix<RatFun>>& operators) {
  return jucys_murphy_recursive(operators);
}

// ---------------------------------------------------------------------------

namespace {

// Matrix A with H A = M H when the column span of H is M-invariant.
std::optional<Matrix<RatFun>> restrict_to(const Matrix<RatFun>& h, const Matrix<RatFun>& m) {
  const std::size_t k = h.cols();
  Echelon<RatFun> e = row_reduce(h.transpose());
  if (e.rank() != k) return std::nullopt;
  Matrix<RatFun> mh = m * h;
  Matrix<RatFun> hs(k, k), ms(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      hs(r, c) = h(e.pivots[r], c);
      ms(r, c) = mh(e.pivots[r], c);
    }
  auto a = solve(hs, ms);
  if (!a || !(h * *a == mh)) return std::nullopt;
  return a;
}

// Solutions Phi of A_i Phi = Phi T_i for all i, as a basis of vec(Phi).
Matrix<RatFun> intertwiners(const std::vector<Matrix<RatFun>>& a, const std::vector<Matrix<RatFun>>& t) {
  const std::size_t k = a.front().rows();
  Matrix<RatFun> sys(a.size() * k * k, k * k);
  for (std::size_t g = 0; g < a.size(); ++g)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        const std::size_t row = (g * k + r) * k + c;
        for (std::size_t x = 0; x < k; ++x) {
          if (!a[g](r, x).is_zero()) sys(row, x * k + c) += a[g](r, x);
          if (!t[g](x, c).is_zero()) sys(row, r * k + x) -= t[g](x, c);
        }
      }
  return nullspace(sys);
}

std::size_t rank_of_rows(const std::vector<std::vector<Fp>>& rows, std::size_t len) {
  IncrementalSpan<Fp> s(len);
  for (const auto& r : rows) s.add(r);
  return s.rank();
}

}  // namespace

std::vector<DrinfeldEntry> drinfeld_check(const std::vector<int>& levi, RootConvention conv) {
  BraidAction act(levi, 1, conv);
  const int m = act.m();
  std::vector<DrinfeldEntry> out;
  int mt = 0;
  for (int i = 1; i <= act.d(); ++i) {
    DrinfeldEntry e;
    e.component = i;
    e.weight = act.verma().top() + Weight::eps(m, mt + 1);
    Matrix<RatFun> h = highest_weight_vectors(act.space(), e.weight);
    e.hwv_dim = h.cols();
    e.scalar = drinfeld_scalar(e.weight, act.verma().top(), Weight::eps(m, 1));
    e.u = act.parameters().u[static_cast<std::size_t>(i - 1)];
    if (e.hwv_dim == 1) {
      Matrix<RatFun> rh = act.R(0, e.weight) * h;
      std::size_t p = 0;
      while (h(p, 0).is_zero()) ++p;
      RatFun s = rh(p, 0) / h(p, 0);
      // Not an eigenvector: leave the eigenvalue at zero, which never matches.
      if (rh == s * h) e.eigenvalue = s;
    }
    out.push_back(std::move(e));
    mt += levi[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

bool SWReport::relations_hold() const {
  return !relations.empty() && std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.holds; });
}

bool SWReport::commutation_holds() const {
  return std::all_of(commutation.begin(), commutation.end(), [](const auto& r) { return r.holds; });
}

bool SWReport::r0_spectrum_holds() const {
  return drinfeld.size() == levi.size() &&
         std::all_of(drinfeld.begin(), drinfeld.end(), [](const auto& e) { return e.matches(); });
}

bool SWReport::decomposition_holds() const {
  bool ok = stray_hwv.empty() && hwv_total == hwv_expected && image_rank == expected_rank && kernel_matches;
  for (const auto& s : shapes) ok = ok && s.hwv_dim == s.expected && s.spectrum_matches && s.intertwiner;
  if (blob_ideal_matches) ok = ok && *blob_ideal_matches;
  return ok;
}

bool SWReport::passed() const {
  return relations_hold() && commutation_holds() && r0_spectrum_holds() && decomposition_holds();
}

SWReport schur_weyl_verify(const std::vector<int>& levi, int n, std::uint64_t seed, RootConvention conv) {
  BraidAction act(levi, n, conv);
  const TensorPowerModule& space = act.space();
  const auto& params = act.parameters();
  const int m = act.m();
  const int d = act.d();

  SWReport r;
  r.m = m;
  r.levi = levi;
  r.n = n;
  r.depth = act.verma().depth_bound();
  r.u = params.u;

  // (a) Hecke relations, block by block.
  std::vector<std::string> order;
  std::map<std::string, bool> agg;
  for (const auto& w : act.tracked_weights()) {
    const std::size_t dim = space.dim(w);
    r.tracked_dim += dim;
    if (dim == 0) continue;
    for (const auto& c : check_hecke_relations(act.operators(w), params)) {
      auto [it, fresh] = agg.emplace(c.name, true);
      if (fresh) order.push_back(c.name);
      if (!c.holds && it->second) r.witnesses.push_back(c.name + " fails at " + w.to_string());
      it->second = it->second && c.holds;
    }
  }
  for (const auto& name : order) r.relations.push_back({name, agg[name]});

  // (b) R_i against E_j and F_j.
  for (int i = 0; i < n; ++i)
    for (int j = 1; j < m; ++j) {
      const Weight al = Weight::alpha(m, j);
      bool e_ok = true, f_ok = true;
      for (const auto& w : act.tracked_weights()) {
        if (space.dim(w) == 0) continue;
        Matrix<RatFun> ej = space.e(j, w);
        if (e_ok && ej.rows() > 0 && !(act.R(i, w + al) * ej == ej * act.R(i, w))) {
          e_ok = false;
          r.witnesses.push_back("R" + std::to_string(i) + " E" + std::to_string(j) + " at " + w.to_string());
        }
        try {
          Matrix<RatFun> fj = space.f(j, w);
          if (f_ok && fj.rows() > 0 && !(act.R(i, w - al) * fj == fj * act.R(i, w))) {
            f_ok = false;
            r.witnesses.push_back("R" + std::to_string(i) + " F" + std::to_string(j) + " at " + w.to_string());
          }
        } catch (const TruncationEscape& ex) {
          f_ok = false;
          r.witnesses.push_back(ex.what());
        }
      }
      r.commutation.push_back({"R" + std::to_string(i) + " E" + std::to_string(j), e_ok});
      r.commutation.push_back({"R" + std::to_string(i) + " F" + std::to_string(j), f_ok});
    }

  r.drinfeld = drinfeld_check(levi, conv);

  // (c), (d) highest weight spaces and their Hecke-side action.
  std::set<Weight> lambdas;
  std::vector<std::vector<Matrix<RatFun>>> restricted;
  bool restricted_ok = true;
  for (const auto& mu : restricted_multipartitions(d, n, levi)) {
    SWShape s;
    s.shape = mu;
    s.weight = levi_highest_weight(levi, mu);
    lambdas.insert(s.weight);
    s.expected = path_count(mu);
    r.hwv_expected += s.expected;
    Matrix<RatFun> h = highest_weight_vectors(space, s.weight);
    s.hwv_dim = h.cols();
    std::vector<Matrix<RatFun>> a;
    if (s.hwv_dim == s.expected && s.hwv_dim > 0) {
      for (int i = 0; i < n; ++i) {
        auto ai = restrict_to(h, act.R(i, s.weight));
        if (!ai) {
          r.witnesses.push_back("highest weight space of " + mu.to_string() + " not stable under R" + std::to_string(i));
          a.clear();
          break;
        }
        a.push_back(std::move(*ai));
      }
    } else {
      r.witnesses.push_back("highest weight space of " + mu.to_string() + " has dimension " + std::to_string(s.hwv_dim) +
                            ", expected " + std::to_string(s.expected));
    }
    if (!a.empty()) {
      auto x = jucys_murphy_action(a);
      s.spectrum_matches = true;
      for (const auto& t : standard_tableaux(mu)) {
        std::vector<RatFun> contents;
        std::vector<Matrix<RatFun>> shifted;
        for (int i = 1; i <= n; ++i) {
          contents.push_back(box_content(content_of_entry(t, i), params));
          shifted.push_back(x[static_cast<std::size_t>(i - 1)] - contents.back() * Matrix<RatFun>::identity(s.hwv_dim));
        }
        if (nullspace(Matrix<RatFun>::vstack(shifted, s.hwv_dim)).cols() != 1) {
          s.spectrum_matches = false;
          r.witnesses.push_back("no joint eigenline for tableau " + t.to_string());
        }
        s.spectrum.push_back(std::move(contents));
      }
      SpechtModule<RatFun> v(mu, params);
      Matrix<RatFun> phi = intertwiners(a, v.generators());
      if (phi.cols() == 1) {
        const std::size_t k = s.hwv_dim;
        Matrix<RatFun> p(k, k);
        for (std::size_t e = 0; e < k * k; ++e) p(e / k, e % k) = phi(e, 0);
        s.intertwiner = !determinant(p).is_zero();
      }
      if (!s.intertwiner) r.witnesses.push_back("no isomorphism onto V_" + mu.to_string());
    }
    restricted_ok = restricted_ok && !a.empty();
    restricted.push_back(std::move(a));
    r.shapes.push_back(std::move(s));
  }
  for (const auto& w : act.tracked_weights()) {
    const std::size_t k = highest_weight_vectors(space, w).cols();
    r.hwv_total += k;
    if (k > 0 && !lambdas.count(w)) {
      r.stray_hwv.push_back({w, k});
      r.witnesses.push_back("highest weight vectors at " + w.to_string() + " outside every Lambda_mu");
    }
  }

  // (e) image of the basis words and its kernel, at a modular point.
  for (const auto& s : r.shapes) r.expected_rank += s.expected * s.expected;
  if (!restricted_ok) return r;
  const ParamAssignment at = ParamAssignment::random_modular(Fp::modulus(), seed);
  auto to_fp = [&at](const RatFun& x) { return specialize_mod(x, at); };
  std::vector<std::vector<Matrix<Fp>>> afp;
  for (const auto& a : restricted) {
    afp.emplace_back();
    for (const auto& ai : a) afp.back().push_back(ai.map<Fp>(to_fp));
  }
  RegularRepresentation<Fp> rep(d, n, specialize_parameters(params, at), to_fp);
  std::vector<bool> inside;
  for (const auto& mu : rep.shapes()) inside.push_back(mu.fits(levi));

  const auto words = ak_basis_words(d, n);
  const std::size_t nw = words.size();
  std::vector<std::vector<Fp>> w_rows, full_rows, proj_rows;
  for (const auto& b : words) {
    const Word& word = b.terms().begin()->first;
    std::vector<Fp> row;
    for (const auto& a : afp) {
      Matrix<Fp> prod = Matrix<Fp>::identity(a.front().rows());
      for (int letter : word) prod = prod * a[static_cast<std::size_t>(letter)];
      for (std::size_t x = 0; x < prod.rows(); ++x)
        for (std::size_t y = 0; y < prod.cols(); ++y) row.push_back(prod(x, y));
    }
    w_rows.push_back(std::move(row));
    BlockMatrix<Fp> img = rep.rho_word(word);
    full_rows.push_back(blocks_flatten(img));
    BlockMatrix<Fp> kept;
    for (std::size_t k = 0; k < img.size(); ++k)
      if (inside[k]) kept.push_back(img[k]);
    proj_rows.push_back(blocks_flatten(kept));
  }
  const std::size_t w_len = w_rows.front().size();
  const std::size_t p_len = proj_rows.front().size();
  r.image_rank = rank_of_rows(w_rows, w_len);
  const std::size_t proj_rank = rank_of_rows(proj_rows, p_len);
  // Equal left kernels of the word matrices <=> equal column spaces.
  std::vector<std::vector<Fp>> joint;
  for (std::size_t k = 0; k < nw; ++k) {
    auto row = w_rows[k];
    row.insert(row.end(), proj_rows[k].begin(), proj_rows[k].end());
    joint.push_back(std::move(row));
  }
  const std::size_t joint_rank = rank_of_rows(joint, w_len + p_len);
  r.kernel_rank = nw - r.image_rank;
  r.quotient_kernel_rank = nw - proj_rank;
  bool isos = std::all_of(r.shapes.begin(), r.shapes.end(), [](const SWShape& s) { return s.intertwiner; });
  r.kernel_matches = isos && r.image_rank == proj_rank && joint_rank == proj_rank;
  if (!r.kernel_matches) r.witnesses.push_back("word-map kernel differs from the row-quotient kernel");

  const bool blob = std::all_of(levi.begin(), levi.end(), [](int b) { return b == 1; }) && d >= 2 && n >= 2;
  if (blob) {
    IncrementalSpan<Fp> ideal = ideal_closure(rep, {tau_element(d, n, params.u, params.q)});
    const std::size_t ideal_rank = ideal.rank();
    Matrix<Fp> wm(nw, w_len);
    for (std::size_t k = 0; k < nw; ++k)
      for (std::size_t c = 0; c < w_len; ++c) wm(k, c) = w_rows[k][c];
    Matrix<Fp> kernel = nullspace(wm.transpose());
    IncrementalSpan<Fp> kimg(rep.algebra_dim());
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
      std::vector<Fp> v(rep.algebra_dim(), Fp(0));
      for (std::size_t k = 0; k < nw; ++k)
        if (!is_zero(kernel(k, c)))
          for (std::size_t j = 0; j < v.size(); ++j) v[j] += kernel(k, c) * full_rows[k][j];
      kimg.add(v);
      ideal.add(std::move(v));
    }
    r.blob_ideal_matches = kimg.rank() == ideal_rank && ideal.rank() == ideal_rank;
    if (!*r.blob_ideal_matches) r.witnesses.push_back("word-map kernel differs from ideal(tau)");
  }
  return r;
}

}  // namespace aksw
