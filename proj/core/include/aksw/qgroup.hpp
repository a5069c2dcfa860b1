#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "aksw/combinatorics.hpp"
#include "aksw/matrix.hpp"
#include "aksw/ratfun.hpp"
#include "aksw/specht.hpp"

namespace aksw {

/// Element of Z[beta_1..beta_d] (x) P, stored by eps-coordinates.
struct Weight {
  std::vector<LinearForm> c;  // c[k-1] = coefficient of eps_k

  static Weight zero(int m);
  static Weight eps(int m, int k);
  /// alpha_i = eps_i - eps_{i+1}.
  static Weight alpha(int m, int i);
  /// eps_i - eps_j.
  static Weight root(int m, int i, int j);

  int m() const { return static_cast<int>(c.size()); }
  bool is_integral() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t s, Weight a);
  friend bool operator==(const Weight& a, const Weight& b);
  friend bool operator<(const Weight& a, const Weight& b);

  /// `[b1; b1+1; -2]`.
  std::string to_string() const;
};

/// <x, y>; throws Error when both sides involve beta (the result would not
/// be linear).
Pairing pair(const Weight& x, const Weight& y);

/// 2*rho = sum over i<j of (eps_i - eps_j).
Weight two_rho(int m);

/// Lambda_mu for the Levi blocks `levi` (sum = m): eps-coordinate
/// mt_{i-1}+j carries beta_i + mu^(i)_j. Requires l(mu^(i)) <= m_i.
Weight levi_highest_weight(const std::vector<int>& levi, const MultiPartition& mu);

/// q^{<lambda,lambda+2rho> - <mu,mu+2rho> - <nu,nu+2rho>}. Throws when the
/// exponent is not linear in beta.
RatFun drinfeld_scalar(const Weight& lambda, const Weight& mu, const Weight& nu);

/// A weight-graded module over U_q(gl_m) with finitely many tracked weights.
/// e(i, w) is the matrix of E_i from the w space to the w + alpha_i space
/// (columns indexed by the source basis), f(i, w) likewise to w - alpha_i.
class WeightModule {
 public:
  virtual ~WeightModule() = default;

  virtual int m() const = 0;
  virtual std::string name() const = 0;
  /// Weights with nonzero space, in a fixed order.
  virtual const std::vector<Weight>& weights() const = 0;
  virtual std::size_t dim(const Weight& w) const = 0;
  virtual Matrix<RatFun> e(int i, const Weight& w) const = 0;
  /// Throws TruncationEscape when the target lies past a truncation bound.
  virtual Matrix<RatFun> f(int i, const Weight& w) const = 0;

  /// L_k acts on weight w by q^{<w, eps_k>}.
  RatFun l(int k, const Weight& w) const;
  /// K_i = L_i L_{i+1}^{-1}.
  RatFun k(int i, const Weight& w) const;
  std::size_t total_dim() const;
};

using ModulePtr = std::shared_ptr<const WeightModule>;

/// The standard module V with basis v_1..v_m of weights eps_1..eps_m.
class StandardModule final : public WeightModule {
 public:
  explicit StandardModule(int m);
  int m() const override { return m_; }
  std::string name() const override { return "V"; }
  const std::vector<Weight>& weights() const override { return weights_; }
  std::size_t dim(const Weight& w) const override;
  Matrix<RatFun> e(int i, const Weight& w) const override;
  Matrix<RatFun> f(int i, const Weight& w) const override;
  /// Index j (1-based) of the basis vector of weight w, or 0.
  int index(const Weight& w) const;

 private:
  int m_;
  std::vector<Weight> weights_;
};

/// Word F_{i_1} F_{i_2} ... F_{i_k} applied to the highest weight vector.
using FWord = std::vector<int>;

/// Contravariant form <F_w v, F_w' v> on the universal Verma module of
/// highest weight `top`, computed in the free model by moving raising
/// operators to the right.
RatFun shapovalov_pair(const FWord& w, const FWord& w2, const Weight& top);

/// Simple highest weight module of highest weight Lambda_mu for the Levi
/// `levi`, truncated at depth D (height of Lambda_mu - weight). At generic
/// beta this is the parabolic Verma module M^p(Lambda, mu).
///
/// Each weight space is spanned by candidates F_i b (b a basis vector one
/// level up) modulo vectors killed by every E_j, which in a simple module is
/// exactly the radical of the contravariant form.
class ParabolicVerma final : public WeightModule {
 public:
  ParabolicVerma(std::vector<int> levi, int depth, const MultiPartition& mu);
  /// mu = 0.
  ParabolicVerma(std::vector<int> levi, int depth);

  int m() const override { return m_; }
  std::string name() const override;
  const std::vector<Weight>& weights() const override { return weights_; }
  std::size_t dim(const Weight& w) const override;
  Matrix<RatFun> e(int i, const Weight& w) const override;
  Matrix<RatFun> f(int i, const Weight& w) const override;

  const Weight& top() const { return top_; }
  int depth_bound() const { return depth_; }
  const std::vector<int>& levi() const { return levi_; }
  /// Height of top - w, or -1 when w is not below top in the root cone.
  int depth_of(const Weight& w) const;
  /// Basis vectors of the w space as F-words.
  const std::vector<FWord>& basis_words(const Weight& w) const;

 private:
  struct Space {
    std::vector<FWord> words;
    std::vector<Matrix<RatFun>> e;  // e[i-1]: to w + alpha_i
    std::vector<Matrix<RatFun>> f;  // f[i-1]: to w - alpha_i (empty at the depth bound)
  };
  void build();
  const Space* find(const Weight& w) const;

  std::vector<int> levi_;
  int m_;
  int depth_;
  Weight top_;
  std::string label_;
  std::map<Weight, Space> spaces_;
  std::vector<Weight> weights_;
};

/// Components (wa, wb) of the weight-w space of A (x) B with their offsets;
/// the basis of each component is ia * dim_b + ib.
struct TensorComponent {
  Weight wa;
  Weight wb;
  std::size_t offset;
  std::size_t da;
  std::size_t db;
};

std::vector<TensorComponent> tensor_components(const WeightModule& a, const WeightModule& b, const Weight& w);

class TensorModule final : public WeightModule {
 public:
  TensorModule(ModulePtr a, ModulePtr b);

  int m() const override { return a_->m(); }
  std::string name() const override { return "(" + a_->name() + " x " + b_->name() + ")"; }
  const std::vector<Weight>& weights() const override { return weights_; }
  std::size_t dim(const Weight& w) const override;
  /// E acts by E (x) 1 + K (x) E.
  Matrix<RatFun> e(int i, const Weight& w) const override;
  /// F acts by F (x) K^{-1} + 1 (x) F.
  Matrix<RatFun> f(int i, const Weight& w) const override;

  const WeightModule& first() const { return *a_; }
  const WeightModule& second() const { return *b_; }
  std::vector<TensorComponent> components(const Weight& w) const { return tensor_components(*a_, *b_, w); }

 private:
  ModulePtr a_;
  ModulePtr b_;
  std::vector<Weight> weights_;
};

/// M (x) V^{(x) n} with a flat basis: V-slot tuples (lexicographic), then
/// the M basis of the remaining weight. Slot 0 is M.
class TensorPowerModule final : public WeightModule {
 public:
  TensorPowerModule(ModulePtr mod, int n);

  int m() const override { return mod_->m(); }
  std::string name() const override;
  const std::vector<Weight>& weights() const override { return weights_; }
  std::size_t dim(const Weight& w) const override;
  Matrix<RatFun> e(int i, const Weight& w) const override;
  Matrix<RatFun> f(int i, const Weight& w) const override;

  int n() const { return n_; }
  const WeightModule& base() const { return *mod_; }

  struct Entry {
    std::vector<int> slots;  // V indices 1..m
    Weight wm;               // weight of the M component
    std::size_t offset;
    std::size_t dm;
  };
  /// Nonempty components of the w space in basis order.
  std::vector<Entry> entries(const Weight& w) const;
  /// Sum of eps_{j} over a slot tuple.
  Weight slot_weight(const std::vector<int>& slots) const;

 private:
  ModulePtr mod_;
  int n_;
  std::vector<Weight> weights_;
};

/// Root vector convention. `reversed` swaps the two products inside each
/// bracket; `inverted` exchanges q and q^{-1} in both brackets.
struct RootConvention {
  bool reversed = false;
  bool inverted = false;
};

/// E_(i,j) for i < j: E_(i,i+1) = E_i,
/// E_(i,j) = E_(i,j-1) E_{j-1} - q^{-1} E_{j-1} E_(i,j-1); matrix from w.
Matrix<RatFun> root_e(const WeightModule& mod, int i, int j, const Weight& w, RootConvention conv = {});
/// F_(i,j) = F_{j-1} F_(i,j-1) - q F_(i,j-1) F_{j-1}; matrix from w.
Matrix<RatFun> root_f(const WeightModule& mod, int i, int j, const Weight& w, RootConvention conv = {});

/// Kernel of the stacked E_1..E_{m-1} on the w space (columns).
Matrix<RatFun> highest_weight_vectors(const WeightModule& mod, const Weight& w);

/// Defining relations of U_q(gl_m) on every weight space of `mod` where all
/// intermediate weights stay inside the module (E/F commutators, [E_i,F_j],
/// Serre relations). Relations whose evaluation would escape a truncation
/// are skipped.
std::vector<RelationCheck> check_qgroup_relations(const WeightModule& mod);

/// Number of ways to write gamma (alpha coordinates) as a sum of roots
/// eps_a - eps_b, a < b, with a and b in different Levi blocks.
std::uint64_t kostant_count(const std::vector<int>& levi, const std::vector<int>& gamma);

}  // namespace aksw
