#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace quiverthick {

/// Field elements are stored as GMP rationals. Over a prime field they are
/// always kept reduced to an integer residue in [0, p).
using Scalar = mpq_class;

/// Exact working field: the rationals or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidArgument unless p is a prime that fits comfortably in 31 bits.
  static Field prime(std::int64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  /// 0 for the rationals.
  std::int64_t characteristic() const { return p_; }

  /// Maps a rational into the field (for F_p: numerator times inverse denominator).
  /// Throws InvalidArgument when the denominator vanishes mod p.
  Scalar from(const mpq_class& q) const;
  Scalar from(long v) const { return from(mpq_class(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

bool is_prime_number(std::int64_t n);

}  // namespace quiverthick
