#pragma once

#include "aksw/modp.hpp"
#include "aksw/ratfun.hpp"

namespace aksw {

/// Scalar context: how q, l_k and weight pairings are realized in F.
template <class F>
class Ground;

template <>
class Ground<RatFun> {
 public:
  static constexpr bool exact = true;

  RatFun q() const { return RatFun::q(); }
  RatFun lambda(int k) const { return RatFun::lambda(k); }
  RatFun q_power(const Pairing& p) const { return aksw::q_power(p); }
  RatFun from(const RatFun& x) const { return x; }
};

template <>
class Ground<Fp> {
 public:
  static constexpr bool exact = false;

  explicit Ground(ParamAssignment at) : at_(std::move(at)) {
    q_ = specialize_mod(RatFun::q(), at_);
    q_inv_ = q_.inverse();
  }

  Fp q() const { return q_; }
  Fp lambda(int k) const { return specialize_mod(RatFun::lambda(k), at_); }
  Fp q_power(const Pairing& p) const {
    Fp r = q_.pow(p.constant);
    for (std::size_t i = 0; i < p.beta.size(); ++i)
      if (p.beta[i] != 0) r *= lambda(static_cast<int>(i) + 1).pow(p.beta[i]);
    return r;
  }
  Fp from(const RatFun& x) const { return specialize_mod(x, at_); }
  const ParamAssignment& point() const { return at_; }

 private:
  ParamAssignment at_;
  Fp q_;
  Fp q_inv_;
};

/// Quantum integer [x]_q = (q^x - q^{-x}) / (q - q^{-1}).
template <class F>
F quantum_integer(const Ground<F>& g, const LinearForm& x) {
  F q = g.q();
  F qi = F(1) / q;
  return (g.q_power(x) - g.q_power(-1 * x)) / (q - qi);
}

}  // namespace aksw
