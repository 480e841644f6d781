#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiverthick/field.hpp"
#include "quiverthick/linalg.hpp"

namespace quiverthick {

/// Univariate polynomial over a Field; coefficients from low to high degree,
/// with no trailing zeros (the zero polynomial is empty).
struct Polynomial {
  std::vector<Scalar> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  void trim();

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial poly_monomial(const Field& f, int degree);
Polynomial poly_add(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Field& f, const Polynomial& a, const Polynomial& b);
/// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> poly_divmod(const Field& f, const Polynomial& a, const Polynomial& b);
/// Monic gcd.
Polynomial poly_gcd(const Field& f, Polynomial a, Polynomial b);
Polynomial poly_derivative(const Field& f, const Polynomial& a);
Scalar poly_eval(const Field& f, const Polynomial& a, const Scalar& x);
Matrix poly_eval(const Field& f, const Polynomial& a, const Matrix& m);

/// Monic minimal polynomial of a square matrix.
Polynomial minimal_polynomial(const Field& f, const Matrix& m);

/// A monic factor u of p with 0 < deg u < deg p, when one can be certified.
/// Detects repeated factors and roots in the field; over F_p also runs
/// distinct- and equal-degree splitting. Over Q, squarefree polynomials
/// without rational roots are reported as unsplit.
std::optional<Polynomial> proper_factor(const Field& f, const Polynomial& p, std::uint64_t seed = 0);

/// Human-readable form, highest degree first, e.g. "x^2 + 1".
std::string to_string(const Polynomial& p);

}  // namespace quiverthick
