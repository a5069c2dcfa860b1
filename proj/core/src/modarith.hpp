#pragma once

#include <cstdint>

namespace aksw::detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Inverse of a nonzero residue via the extended Euclidean algorithm.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  __int128 t = 0, nt = 1;
  __int128 r = p, nr = a % p;
  while (nr != 0) {
    __int128 qt = r / nr;
    __int128 tmp = t - qt * nt;
    t = nt;
    nt = tmp;
    tmp = r - qt * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

}  // namespace aksw::detail
