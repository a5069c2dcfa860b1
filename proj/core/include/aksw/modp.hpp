#pragma once

#include <cstdint>
#include <string>

namespace aksw {

/// Element of the prime field F_p. The modulus is process-wide and must be
/// set before any value is created (defaults to 2^61 - 1).
class Fp {
 public:
  Fp() = default;
  Fp(long v);  // NOLINT(google-explicit-constructor)
  static Fp from_raw(std::uint64_t v) {
    Fp r;
    r.v_ = v % modulus_;
    return r;
  }

  static std::uint64_t modulus() { return modulus_; }
  /// Throws aksw::Error if p is not prime or not in [3, 2^62).
  static void set_modulus(std::uint64_t p);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

  Fp inverse() const;
  Fp pow(long e) const;
  std::string to_string() const { return std::to_string(v_); }

 private:
  std::uint64_t v_ = 0;
  static inline std::uint64_t modulus_ = (std::uint64_t{1} << 61) - 1;
};

bool is_prime_u64(std::uint64_t n);

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline std::size_t pivot_cost(const Fp&) { return 1; }

}  // namespace aksw
