#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "aksw/combinatorics.hpp"
#include "aksw/linalg.hpp"
#include "aksw/matrix.hpp"
#include "aksw/ratfun.hpp"
#include "aksw/specht.hpp"

namespace aksw {

/// Letters are generator indices: 0 stands for T0, i for T_i.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);
/// Parses `T0 T1 T0`; an empty string or `1` is the empty word.
Word parse_word(std::string_view text);

/// Finite linear combination of words with RatFun coefficients; zero
/// coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement one() { return word({}); }
  static AlgebraElement scalar(const RatFun& c);
  static AlgebraElement word(const Word& w, const RatFun& c = RatFun(1));
  static AlgebraElement generator(int i) { return word({i}); }

  const std::map<Word, RatFun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_letter() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const RatFun& c, const AlgebraElement& a);

  std::string to_string() const;

 private:
  std::map<Word, RatFun> terms_;
};

/// X_i = T_{i-1} ... T_1 T_0 T_1 ... T_{i-1}.
Word jm_word(int i);

/// {X_1^{r_1} ... X_n^{r_n} T_w : 0 <= r_i < d, w in S_n}; T_w uses the
/// reduced word obtained by repeatedly removing the first descent.
std::vector<AlgebraElement> ak_basis_words(int d, int n);

/// Product over i<j (lexicographic) of (T1-q)(T0 - q(u_i+u_j)/(q+q^-1))(T1-q).
AlgebraElement tau_element(int d, int n, const std::vector<RatFun>& u, const RatFun& q);

/// (T1-q) * prod_{i<j} (X1+X2-(u_i+u_j)).
AlgebraElement reljm_element(int d, const std::vector<RatFun>& u, const RatFun& q);

template <class F>
using BlockMatrix = std::vector<Matrix<F>>;

template <class F>
bool blocks_zero(const BlockMatrix<F>& m);
template <class F>
BlockMatrix<F> blocks_mul(const BlockMatrix<F>& a, const BlockMatrix<F>& b);
/// Row-major concatenation of all block entries.
template <class F>
std::vector<F> blocks_flatten(const BlockMatrix<F>& m);

/// The direct sum of all seminormal modules V_mu, mu a d-partition of n.
template <class F>
class RegularRepresentation {
 public:
  using Converter = std::function<F(const RatFun&)>;

  RegularRepresentation(int d, int n, HeckeParameters<F> params, Converter convert);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<MultiPartition>& shapes() const { return shapes_; }
  const SpechtModule<F>& module(std::size_t k) const { return modules_[k]; }
  std::size_t blocks() const { return modules_.size(); }
  std::vector<std::size_t> block_dims() const;
  /// Sum of (dim V_mu)^2.
  std::size_t algebra_dim() const;

  BlockMatrix<F> identity() const;
  BlockMatrix<F> generator(int i) const;
  BlockMatrix<F> rho_word(const Word& w) const;
  BlockMatrix<F> rho(const AlgebraElement& x) const;
  F convert(const RatFun& c) const { return convert_(c); }
  const HeckeParameters<F>& parameters() const { return params_; }

 private:
  int d_;
  int n_;
  HeckeParameters<F> params_;
  Converter convert_;
  std::vector<MultiPartition> shapes_;
  std::vector<SpechtModule<F>> modules_;
};

extern template class RegularRepresentation<RatFun>;
extern template class RegularRepresentation<Fp>;

/// Exact representation at generic parameters plus a modular shadow at a
/// deterministic random point, used for rank lower bounds.
class ArikiKoike {
 public:
  ArikiKoike(int d, int n, std::uint64_t seed = 0x41AB5EEDULL);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<RatFun>& u() const { return exact_->parameters().u; }
  RatFun q() const { return RatFun::q(); }
  const RegularRepresentation<RatFun>& exact() const { return *exact_; }
  const RegularRepresentation<Fp>& modular() const { return *modular_; }
  const ParamAssignment& point() const { return point_; }

 private:
  int d_;
  int n_;
  ParamAssignment point_;
  std::unique_ptr<RegularRepresentation<RatFun>> exact_;
  std::unique_ptr<RegularRepresentation<Fp>> modular_;
};

/// Subspace of the image algebra that is a sum of full blocks End(V_mu).
struct BlockSubspace {
  std::vector<bool> support;
  std::vector<std::size_t> block_dims;

  std::size_t rank() const;
  /// Matrix units of the supported blocks, in block then row-major order.
  std::vector<BlockMatrix<RatFun>> echelon_basis() const;
  friend bool operator==(const BlockSubspace&, const BlockSubspace&) = default;
};

/// Rank of span{rho(b)} over the basis words, computed at the modular point;
/// a lower bound for the generic rank.
std::size_t basis_rank(const ArikiKoike& ak);

struct IdealSpan {
  BlockSubspace subspace;      // blocks where some generator is exactly nonzero
  std::size_t closure_rank = 0;  // modular rank of the generator closure
  /// The closure reached exactly the supported blocks.
  bool consistent() const { return closure_rank == subspace.rank(); }
};

/// Closure of span{rho(g)} under left and right multiplication by the
/// generators, as a span of flattened block matrices.
IncrementalSpan<Fp> ideal_closure(const RegularRepresentation<Fp>& rep, const std::vector<AlgebraElement>& gens);

/// Two-sided ideal generated by gens inside the image algebra.
IdealSpan ideal_span(const ArikiKoike& ak, const std::vector<AlgebraElement>& gens);

struct RowQuotientKernel {
  BlockSubspace subspace;             // blocks mu outside the row bounds
  std::size_t image_rank = 0;          // modular rank of span{rho(basis words)}
  std::size_t projected_rank = 0;      // same, projected to the bounded blocks
  std::size_t kernel_rank() const { return image_rank - projected_rank; }
};

RowQuotientKernel row_quotient_kernel(const ArikiKoike& ak, const std::vector<int>& bounds);

struct BlobCertificate {
  bool hypotheses = false;        // Ariki product and (1+q^-2)u_k != u_i+u_j
  IdealSpan tau;
  IdealSpan reljm;
  RowQuotientKernel kernel;
  bool tau_equals_kernel = false;
  bool reljm_equals_tau = false;
  std::string witness;  // first disagreeing block, if any
  bool holds() const {
    return hypotheses && tau.consistent() && reljm.consistent() && tau_equals_kernel && reljm_equals_tau &&
           kernel.kernel_rank() == kernel.subspace.rank();
  }
};

/// Requires d >= 2 (throws otherwise).
BlobCertificate blob_theorem_check(const ArikiKoike& ak);

/// Per pair i<j: rho((T1-q)(T0 - q(u_i+u_j)/(q+q^-1))(T1-q)) equals
/// rho(-q(X1+X2-(u_i+u_j))(T1-q)) exactly.
std::vector<RelationCheck> reljm_identity_check(const ArikiKoike& ak);

/// Per shape: whether rho_mu(tau) vanishes, and whether every component of
/// mu has at most one row.
struct TauAction {
  MultiPartition shape;
  bool vanishes = false;
  bool single_rows = false;
};
std::vector<TauAction> action_tau(const ArikiKoike& ak);

/// e_k(X_1..X_n) commute with every T_i and act by scalars on every block.
std::vector<RelationCheck> center_check(const ArikiKoike& ak);

/// prod_{-n<l<n, i<j} (q^{2l} u_i - u_j) * prod_{1<=i<=n} (1 + q^2 + ... + q^{2(i-1)}).
RatFun ariki_criterion(int n, const std::vector<RatFun>& u, const RatFun& q);

}  // namespace aksw
