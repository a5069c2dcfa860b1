#pragma once

#include <string>
#include <vector>

#include "aksw/combinatorics.hpp"
#include "aksw/matrix.hpp"
#include "aksw/modp.hpp"
#include "aksw/ratfun.hpp"

namespace aksw {

/// q and the cyclotomic parameters u_1..u_d of H(d,n).
template <class F>
struct HeckeParameters {
  F q;
  std::vector<F> u;
  int d() const { return static_cast<int>(u.size()); }
};

/// q and u_c = l_c as independent indeterminates.
HeckeParameters<RatFun> generic_hecke_parameters(int d);
HeckeParameters<Fp> specialize_parameters(const HeckeParameters<RatFun>& p, const ParamAssignment& at);

/// u_c * q^{2(b-a)} for box (a,b,c).
template <class F>
F box_content(const Box& b, const HeckeParameters<F>& p);

/// Seminormal simple module V_mu with basis standard_tableaux(mu).
template <class F>
class SpechtModule {
 public:
  SpechtModule(MultiPartition mu, HeckeParameters<F> params);

  const MultiPartition& shape() const { return shape_; }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  int n() const { return shape_.size(); }
  const HeckeParameters<F>& parameters() const { return params_; }

  /// Generator T_i, 0 <= i < n. Column j is the image of basis vector j.
  const Matrix<F>& T(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  const std::vector<Matrix<F>>& generators() const { return gens_; }
  /// Diagonal X_i (1 <= i <= n) read off from box contents.
  Matrix<F> X(int i) const;
  /// X_i eigenvalue vectors, one per basis tableau.
  const std::vector<std::vector<F>>& spectrum() const { return spectrum_; }

 private:
  MultiPartition shape_;
  HeckeParameters<F> params_;
  std::vector<StandardTableau> basis_;
  std::vector<Matrix<F>> gens_;
  std::vector<std::vector<F>> spectrum_;
};

extern template class SpechtModule<RatFun>;
extern template class SpechtModule<Fp>;

struct RelationCheck {
  std::string name;
  bool holds = false;
};

/// Every defining relation of H(d,n) evaluated on generator matrices
/// T_0..T_{n-1}: quadratic, cyclotomic, type-B braid, type-A braid, far
/// commutation.
template <class F>
std::vector<RelationCheck> check_hecke_relations(const std::vector<Matrix<F>>& gens, const HeckeParameters<F>& p);

/// Jucys-Murphy matrices from X_1 = T_0, X_{i+1} = T_i X_i T_i.
template <class F>
std::vector<Matrix<F>> jucys_murphy_recursive(const std::vector<Matrix<F>>& gens);

/// Shapes nu of size n-1 whose spectra partition the truncated spectra of
/// V_mu, in enumeration order. Throws DegenerateParameters on collisions.
template <class F>
std::vector<MultiPartition> restrict_check(const MultiPartition& mu, const HeckeParameters<F>& p);

}  // namespace aksw
