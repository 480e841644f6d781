#include "quiverthick/polynomial.hpp"

#include <random>
#include <sstream>

#include "quiverthick/error.hpp"

namespace quiverthick {

void Polynomial::trim() {
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

Polynomial poly_monomial(const Field& f, int degree) {
  Polynomial p;
  p.coeffs.assign(degree + 1, f.from(0));
  p.coeffs.back() = f.from(1);
  return p;
}

Polynomial poly_add(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    const Scalar x = i < a.coeffs.size() ? a.coeffs[i] : Scalar(0);
    const Scalar y = i < b.coeffs.size() ? b.coeffs[i] : Scalar(0);
    out.coeffs[i] = f.add(x, y);
  }
  out.trim();
  return out;
}

Polynomial poly_sub(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial nb = b;
  for (auto& c : nb.coeffs) c = f.neg(c);
  return poly_add(f, a, nb);
}

Polynomial poly_mul(const Field& f, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] = f.add(out.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
  out.trim();
  return out;
}

std::pair<Polynomial, Polynomial> poly_divmod(const Field& f, const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  Polynomial rem = a;
  Polynomial quot;
  const int db = b.degree();
  if (rem.degree() < db) return {quot, rem};
  quot.coeffs.assign(rem.degree() - db + 1, Scalar(0));
  const Scalar lead_inv = f.inv(b.coeffs.back());
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const Scalar factor = f.mul(rem.coeffs.back(), lead_inv);
    quot.coeffs[shift] = factor;
    for (int i = 0; i <= db; ++i)
      rem.coeffs[shift + i] = f.sub(rem.coeffs[shift + i], f.mul(factor, b.coeffs[i]));
    rem.coeffs.pop_back();
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

namespace {

Polynomial make_monic(const Field& f, Polynomial p) {
  if (p.is_zero()) return p;
  const Scalar inv = f.inv(p.coeffs.back());
  for (auto& c : p.coeffs) c = f.mul(c, inv);
  return p;
}

Polynomial poly_mod(const Field& f, const Polynomial& a, const Polynomial& m) {
  return poly_divmod(f, a, m).second;
}

Polynomial poly_powmod(const Field& f, Polynomial base, const mpz_class& exponent, const Polynomial& m) {
  Polynomial result;
  result.coeffs = {f.from(1)};
  result = poly_mod(f, result, m);
  base = poly_mod(f, base, m);
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_mod(f, poly_mul(f, result, result), m);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = poly_mod(f, poly_mul(f, result, base), m);
  }
  return result;
}

Polynomial linear_factor(const Field& f, const Scalar& root) {
  Polynomial p;
  p.coeffs = {f.neg(root), f.from(1)};
  return p;
}

bool is_proper(const Polynomial& g, const Polynomial& p) {
  return g.degree() >= 1 && g.degree() < p.degree();
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  std::vector<mpz_class> out;
  if (n < 0) n = -n;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::optional<Scalar> rational_root(const Field& f, const Polynomial& p) {
  if (sgn(p.coeffs.front()) == 0) return Scalar(0);
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  const mpz_class a0 = mpq_class(p.coeffs.front() * lcm_den).get_num();
  const mpz_class an = mpq_class(p.coeffs.back() * lcm_den).get_num();
  for (const auto& num : positive_divisors(a0))
    for (const auto& den : positive_divisors(an))
      for (int sign : {1, -1}) {
        Scalar candidate(sign * num, den);
        candidate.canonicalize();
        if (sgn(poly_eval(f, p, candidate)) == 0) return candidate;
      }
  return std::nullopt;
}

/// Equal-degree splitting of a squarefree product of degree-k irreducibles over F_p.
std::optional<Polynomial> equal_degree_split(const Field& f, const Polynomial& p, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5eedf00dULL);
  const auto q = f.characteristic();
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
  for (int attempt = 0; attempt < 64; ++attempt) {
    Polynomial a;
    for (int i = 0; i < p.degree(); ++i) a.coeffs.push_back(f.from(static_cast<long>(rng() % q)));
    a.trim();
    if (a.degree() < 1) continue;
    Polynomial b;
    if (q == 2) {
      // Trace map a + a^2 + ... + a^(2^(k-1)).
      Polynomial term = poly_mod(f, a, p);
      b = term;
      for (int i = 1; i < k; ++i) {
        term = poly_mod(f, poly_mul(f, term, term), p);
        b = poly_add(f, b, term);
      }
    } else {
      b = poly_powmod(f, a, (pk - 1) / 2, p);
      b = poly_sub(f, b, Polynomial{{f.from(1)}});
    }
    auto g = poly_gcd(f, p, b);
    if (is_proper(g, p)) return g;
  }
  return std::nullopt;
}

std::optional<Polynomial> prime_field_factor(const Field& f, const Polynomial& p, std::uint64_t seed) {
  const auto q = f.characteristic();
  if (q <= 100000) {
    for (long r = 0; r < q; ++r)
      if (sgn(poly_eval(f, p, f.from(r))) == 0) return linear_factor(f, f.from(r));
  }
  const Polynomial x = poly_monomial(f, 1);
  Polynomial h = x;
  for (int k = 1; 2 * k <= p.degree(); ++k) {
    h = poly_powmod(f, h, mpz_class(static_cast<long>(q)), p);
    auto g = poly_gcd(f, p, poly_sub(f, h, x));
    if (is_proper(g, p)) return g;
    if (g.degree() == p.degree()) return equal_degree_split(f, p, k, seed);
  }
  return std::nullopt;
}

}  // namespace

Polynomial poly_gcd(const Field& f, Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, std::move(a));
}

Polynomial poly_derivative(const Field& f, const Polynomial& a) {
  Polynomial out;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    out.coeffs.push_back(f.mul(f.from(static_cast<long>(i)), a.coeffs[i]));
  out.trim();
  return out;
}

Scalar poly_eval(const Field& f, const Polynomial& a, const Scalar& x) {
  Scalar acc = 0;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs[i]);
  return acc;
}

Matrix poly_eval(const Field& f, const Polynomial& a, const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("poly_eval needs a square matrix");
  Matrix acc(m.rows(), m.cols());
  for (std::size_t i = a.coeffs.size(); i-- > 0;)
    acc = add(f, multiply(f, acc, m), scale(f, a.coeffs[i], Matrix::identity(m.rows())));
  return acc;
}

Polynomial minimal_polynomial(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("minimal_polynomial needs a square matrix");
  const auto n = m.rows();
  const auto entries = n * n;
  // Columns hold vec(m^0), vec(m^1), ... until the newest power is dependent.
  Matrix powers(entries, 0);
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 0;; ++k) {
    Matrix column(entries, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) column(i * n + j, 0) = current(i, j);
    if (auto coeffs = try_solve(f, powers, column)) {
      Polynomial p;
      for (std::size_t i = 0; i < k; ++i) p.coeffs.push_back(f.neg((*coeffs)(i, 0)));
      p.coeffs.push_back(f.from(1));
      return p;
    }
    powers = hstack(powers, column);
    current = multiply(f, current, m);
  }
}

std::optional<Polynomial> proper_factor(const Field& f, const Polynomial& p, std::uint64_t seed) {
  if (p.degree() < 2) return std::nullopt;
  const auto monic = make_monic(f, p);
  const auto derivative = poly_derivative(f, monic);
  if (derivative.is_zero()) {
    // Over F_p this means monic(x) = h(x^p) = (h(x))^p.
    Polynomial root;
    const auto q = static_cast<std::size_t>(f.characteristic());
    for (std::size_t i = 0; i < monic.coeffs.size(); i += q) root.coeffs.push_back(monic.coeffs[i]);
    root.trim();
    return root;
  }
  auto g = poly_gcd(f, monic, derivative);
  if (is_proper(g, monic)) return g;
  if (f.is_rationals()) {
    if (auto r = rational_root(f, monic)) return linear_factor(f, *r);
    // TODO: factor squarefree rational polynomials without rational roots
    // (e.g. (x^2-2)(x^2-3)) via a Zassenhaus-style factorization.
    return std::nullopt;
  }
  return prime_field_factor(f, monic, seed);
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    const auto& c = p.coeffs[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

}  // namespace quiverthick
