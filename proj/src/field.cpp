#include "quiverthick/field.hpp"

#include "quiverthick/error.hpp"

namespace quiverthick {

namespace {

std::int64_t residue(const mpz_class& z, std::int64_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
    base = static_cast<std::int64_t>((__int128)base * base % p);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime_number(p))
    throw InvalidArgument("field characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(p);
}

Scalar Field::from(const mpq_class& q) const {
  if (p_ == 0) {
    Scalar c = q;
    c.canonicalize();
    return c;
  }
  const auto num = residue(q.get_num(), p_);
  const auto den = residue(q.get_den(), p_);
  if (den == 0) throw InvalidArgument("denominator vanishes in " + name());
  return Scalar(static_cast<long>((__int128)num * pow_mod(den, p_ - 2, p_) % p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  auto s = a.get_num().get_si() + b.get_num().get_si();
  if (s >= p_) s -= p_;
  return Scalar(static_cast<long>(s));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  auto s = a.get_num().get_si() - b.get_num().get_si();
  if (s < 0) s += p_;
  return Scalar(static_cast<long>(s));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return Scalar(static_cast<long>((__int128)a.get_num().get_si() * b.get_num().get_si() % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  const auto v = a.get_num().get_si();
  return Scalar(static_cast<long>(v == 0 ? 0 : p_ - v));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw InvalidArgument("division by zero");
  if (p_ == 0) return 1 / a;
  return Scalar(static_cast<long>(pow_mod(a.get_num().get_si(), p_ - 2, p_)));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

}  // namespace quiverthick
