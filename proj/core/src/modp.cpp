#include "aksw/modp.hpp"

#include "aksw/error.hpp"
#include "modarith.hpp"

namespace aksw {

using namespace detail;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void Fp::set_modulus(std::uint64_t p) {
  if (p < 3 || p >= (std::uint64_t{1} << 62) || !is_prime_u64(p))
    throw Error("modulus must be an odd prime below 2^62, got " + std::to_string(p));
  modulus_ = p;
}

Fp::Fp(long v) {
  long m = static_cast<long>(v % static_cast<long>(modulus_));
  if (m < 0) m += static_cast<long>(modulus_);
  v_ = static_cast<std::uint64_t>(m);
}

Fp Fp::operator-() const { return from_raw(v_ == 0 ? 0 : modulus_ - v_); }

Fp& Fp::operator+=(const Fp& o) {
  v_ = addmod(v_, o.v_, modulus_);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  v_ = submod(v_, o.v_, modulus_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  v_ = mulmod(v_, o.v_, modulus_);
  return *this;
}

Fp& Fp::operator/=(const Fp& o) { return *this *= o.inverse(); }

Fp Fp::inverse() const {
  if (v_ == 0) throw DivisionByZero();
  return from_raw(invmod(v_, modulus_));
}

Fp Fp::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return from_raw(powmod(v_, static_cast<std::uint64_t>(e), modulus_));
}

}  // namespace aksw
