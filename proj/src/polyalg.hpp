#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace qnewton {

// Polynomial in q over Z, nonnegative exponents only. Sparse: the map never
// stores a zero coefficient.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(long c);
  explicit ZPoly(const mpz_class& c);
  static ZPoly monomial(const mpz_class& c, int exp);
  static ZPoly from_coeffs(std::map<int, mpz_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  int low_exponent() const;  // smallest exponent present; error on zero
  const mpz_class& leading_coeff() const;
  mpz_class coeff(int exp) const;
  const std::map<int, mpz_class>& coeffs() const { return c_; }

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator-() const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator*(const mpz_class& s) const;
  ZPoly& operator+=(const ZPoly& o);
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }
  bool operator!=(const ZPoly& o) const { return !(*this == o); }

  ZPoly shifted(int k) const;  // multiply by q^k, k >= 0
  mpz_class eval(const mpz_class& q) const;
  mpz_class eval_at_one() const;  // coefficient sum

  mpz_class content() const;  // gcd of |coefficients|; 0 for the zero polynomial
  ZPoly primitive_part() const;

  // Canonical ascending-exponent text, e.g. "1 + 2*q + q^2".
  std::string str() const;
  // Compact descending text used inside bivariate slices, e.g. "q^3+q^2".
  std::string str_compact() const;

 private:
  std::map<int, mpz_class> c_;
  void trim();
};

// Quotient and exactness check; error InexactDivision when b does not divide a.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

// True gcd in Z[q] (integer-content gcd times the primitive gcd of primitive
// parts, computed by a fraction-free subresultant remainder sequence),
// normalized to a positive leading coefficient. Error Domain on (0, 0).
ZPoly gcd_zpoly(const ZPoly& a, const ZPoly& b);

// Laurent polynomial in q over Z: integer exponents of either sign.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long c);
  explicit LaurentPoly(const ZPoly& p);
  static LaurentPoly monomial(const mpz_class& c, int exp);

  bool is_zero() const { return c_.empty(); }
  int max_exponent() const;  // error on zero
  int min_exponent() const;  // error on zero
  const std::map<int, mpz_class>& coeffs() const { return c_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  LaurentPoly shifted(int k) const;  // multiply by q^k, any sign
  LaurentPoly mirrored() const;      // substitute q -> 1/q
  ZPoly to_zpoly() const;            // error Domain if a negative exponent is present

  std::string str() const;  // ascending, e.g. "-q^-2 - q^-1"

 private:
  std::map<int, mpz_class> c_;
  void trim();
};

// Element of Q(q) held as a reduced fraction of integer polynomials.
// gcd_zpoly(num, den) == 1 and den has a positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  explicit RatFunc(long c) : num_(c), den_(1) {}
  explicit RatFunc(const ZPoly& n) : num_(n), den_(1) {}
  RatFunc(const ZPoly& n, const ZPoly& d);
  static RatFunc from_laurent(const LaurentPoly& l);

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == ZPoly(1); }
  ZPoly to_zpoly() const;  // error Domain unless den == 1

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // error DivisionByZero
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str() const;

 private:
  ZPoly num_, den_;
  void reduce();
};

// Polynomial in x with coefficients in Q(q); dense ascending by x-degree.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(const RatFunc& c);
  static XPoly from_coeffs(std::vector<RatFunc> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 on zero
  RatFunc coeff(int k) const;
  bool is_zero() const { return c_.empty(); }

  XPoly operator+(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly operator*(const RatFunc& s) const;
  bool operator==(const XPoly& o) const { return c_ == o.c_; }
  bool operator!=(const XPoly& o) const { return !(*this == o); }

  RatFunc eval(const RatFunc& x) const;

  std::string str() const;

 private:
  std::vector<RatFunc> c_;
  void trim();
};

// Bivariate polynomial in (q, x) over Z, stored as x-degree -> q-slice.
class BivarPoly {
 public:
  BivarPoly() = default;
  static BivarPoly from_slices(std::map<int, ZPoly> slices);

  bool is_zero() const { return s_.empty(); }
  int x_degree() const;  // -1 on zero
  ZPoly slice(int x_deg) const;
  const std::map<int, ZPoly>& slices() const { return s_; }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator*(const ZPoly& s) const;
  bool operator==(const BivarPoly& o) const { return s_ == o.s_; }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }

  mpz_class eval(const mpz_class& q, const mpz_class& x) const;
  // Support monomials as (q_exp, x_exp) pairs, lexicographically sorted.
  std::vector<std::pair<long, long>> support() const;

  // Descending x-degree; multi-term slices parenthesized with compact
  // descending-q text, e.g. "(q^3+q^2)*x^2 + (2*q^2+2*q)*x + (q+1)".
  std::string str() const;

 private:
  std::map<int, ZPoly> s_;
};

// gcd of all q-slices of f. Error ZeroPolynomial on f == 0.
ZPoly content_q(const BivarPoly& f);

// Slicewise exact quotient f / d. Error InexactDivision when d fails to
// divide some slice.
BivarPoly exact_div(const BivarPoly& f, const ZPoly& d);

// q-integer [n]_q; negative n handled by [-n]_q = -q^-n [n]_q.
LaurentPoly q_int(long n);
ZPoly q_int_poly(long n);  // n >= 0 only (error Domain)
ZPoly q_factorial(int n);  // error Domain on n < 0
ZPoly q_binom(int n, int k);  // error Domain unless n >= k >= 0

// Unique polynomial of degree < points.size() through the given
// (abscissa, value) pairs over Q(q). Error DuplicateNode on repeated
// abscissae.
XPoly lagrange_interpolate(const std::vector<std::pair<RatFunc, RatFunc>>& points);

}  // namespace qnewton
