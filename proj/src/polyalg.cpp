#include "polyalg.hpp"

#include <algorithm>
#include <sstream>

namespace qnewton {

namespace {

mpz_class int_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class int_pow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class int_divexact(const mpz_class& a, const mpz_class& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw Error(ErrorCode::Internal, "inexact integer division inside gcd");
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Shared term renderer. exp 0 -> "3", exp 1 -> "3*q", general -> "3*q^e";
// unit coefficients drop the "1*".
std::string term_str(const mpz_class& coeff, int exp, bool abs_value) {
  mpz_class c = abs_value ? mpz_class(abs(coeff)) : coeff;
  std::string cs = c.get_str();
  if (exp == 0) return cs;
  std::string qs = exp == 1 ? "q" : "q^" + std::to_string(exp);
  if (c == 1) return qs;
  if (c == -1) return "-" + qs;
  return cs + "*" + qs;
}

template <typename Map>
std::string spaced_ascending_str(const Map& coeffs) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, coeff] : coeffs) {
    if (first) {
      out << term_str(coeff, exp, false);
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ") << term_str(coeff, exp, true);
    }
  }
  return out.str();
}

}  // namespace

// ---------------- ZPoly ----------------

ZPoly::ZPoly(long c) {
  if (c != 0) c_[0] = c;
}

ZPoly::ZPoly(const mpz_class& c) {
  if (c != 0) c_[0] = c;
}

ZPoly ZPoly::monomial(const mpz_class& c, int exp) {
  if (exp < 0) throw Error(ErrorCode::Domain, "ZPoly exponent must be nonnegative");
  ZPoly p;
  if (c != 0) p.c_[exp] = c;
  return p;
}

ZPoly ZPoly::from_coeffs(std::map<int, mpz_class> coeffs) {
  ZPoly p;
  p.c_ = std::move(coeffs);
  if (!p.c_.empty() && p.c_.begin()->first < 0)
    throw Error(ErrorCode::Domain, "ZPoly exponent must be nonnegative");
  p.trim();
  return p;
}

void ZPoly::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0)
      it = c_.erase(it);
    else
      ++it;
  }
}

int ZPoly::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

int ZPoly::low_exponent() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "low exponent of the zero polynomial");
  return c_.begin()->first;
}

const mpz_class& ZPoly::leading_coeff() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return c_.rbegin()->second;
}

mpz_class ZPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? mpz_class(0) : it->second;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r = *this;
  r += o;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

ZPoly ZPoly::operator-() const {
  ZPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
  ZPoly r;
  for (const auto& [ea, ca] : c_)
    for (const auto& [eb, cb] : o.c_) r.c_[ea + eb] += ca * cb;
  r.trim();
  return r;
}

ZPoly ZPoly::operator*(const mpz_class& s) const {
  ZPoly r;
  if (s == 0) return r;
  for (const auto& [e, c] : c_) r.c_[e] = c * s;
  return r;
}

ZPoly ZPoly::shifted(int k) const {
  if (k < 0) throw Error(ErrorCode::Domain, "ZPoly shift must be nonnegative");
  ZPoly r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

mpz_class ZPoly::eval(const mpz_class& q) const {
  // Horner over the sparse exponent ladder.
  mpz_class acc = 0;
  int prev = -1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (prev >= 0) acc *= int_pow(q, static_cast<unsigned long>(prev - it->first));
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc *= int_pow(q, static_cast<unsigned long>(prev));
  return acc;
}

mpz_class ZPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : c_) g = int_gcd(g, c);
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return ZPoly();
  mpz_class g = content();
  ZPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = int_divexact(c, g);
  return r;
}

std::string ZPoly::str() const { return spaced_ascending_str(c_); }

std::string ZPoly::str_compact() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (first) {
      out << term_str(it->second, it->first, false);
      first = false;
    } else {
      out << (it->second < 0 ? "-" : "+") << term_str(it->second, it->first, true);
    }
  }
  return out.str();
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  ZPoly quot;
  ZPoly rem = a;
  const mpz_class& lb = b.leading_coeff();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    if (!mpz_divisible_p(rem.leading_coeff().get_mpz_t(), lb.get_mpz_t()))
      throw Error(ErrorCode::InexactDivision, "leading coefficient not divisible");
    ZPoly t = ZPoly::monomial(rem.leading_coeff() / lb, rem.degree() - b.degree());
    quot += t;
    rem = rem - t * b;
  }
  if (!rem.is_zero()) throw Error(ErrorCode::InexactDivision, "nonzero remainder");
  return quot;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, for deg a >= deg b, b nonzero.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  const mpz_class& lb = b.leading_coeff();
  int db = b.degree();
  ZPoly r = a;
  int e = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    ZPoly t = ZPoly::monomial(r.leading_coeff(), r.degree() - db);
    r = r * lb - t * b;
    --e;
  }
  while (e-- > 0) r = r * lb;
  return r;
}

ZPoly positive_lc(const ZPoly& p) { return p.leading_coeff() < 0 ? -p : p; }

ZPoly scalar_divexact(const ZPoly& p, const mpz_class& s) {
  std::map<int, mpz_class> out;
  for (const auto& [e, c] : p.coeffs()) out[e] = int_divexact(c, s);
  return ZPoly::from_coeffs(std::move(out));
}

}  // namespace

ZPoly gcd_zpoly(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::Domain, "gcd(0, 0) is undefined");
  if (a.is_zero()) return positive_lc(b);
  if (b.is_zero()) return positive_lc(a);
  mpz_class c = int_gcd(a.content(), b.content());
  ZPoly A = a.primitive_part();
  ZPoly B = b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  // Subresultant remainder sequence on the primitive parts.
  mpz_class g = 1, h = 1;
  while (true) {
    if (B.degree() == 0) return ZPoly(c);  // primitive constant is a unit
    int delta = A.degree() - B.degree();
    ZPoly R = pseudo_rem(A, B);
    if (R.is_zero()) return positive_lc(B.primitive_part()) * c;
    A = B;
    B = scalar_divexact(R, g * int_pow(h, static_cast<unsigned long>(delta)));
    g = A.leading_coeff();
    if (delta > 0)
      h = int_divexact(int_pow(g, static_cast<unsigned long>(delta)),
                       int_pow(h, static_cast<unsigned long>(delta - 1)));
  }
}

// ---------------- LaurentPoly ----------------

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_[0] = c;
}

LaurentPoly::LaurentPoly(const ZPoly& p) {
  for (const auto& [e, c] : p.coeffs()) c_[e] = c;
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exp) {
  LaurentPoly p;
  if (c != 0) p.c_[exp] = c;
  return p;
}

void LaurentPoly::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0)
      it = c_.erase(it);
    else
      ++it;
  }
}

int LaurentPoly::max_exponent() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "max exponent of the zero polynomial");
  return c_.rbegin()->first;
}

int LaurentPoly::min_exponent() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "min exponent of the zero polynomial");
  return c_.begin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [ea, ca] : c_)
    for (const auto& [eb, cb] : o.c_) r.c_[ea + eb] += ca * cb;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

ZPoly LaurentPoly::to_zpoly() const {
  std::map<int, mpz_class> out;
  for (const auto& [e, c] : c_) {
    if (e < 0) throw Error(ErrorCode::Domain, "Laurent polynomial has negative exponents");
    out[e] = c;
  }
  return ZPoly::from_coeffs(std::move(out));
}

std::string LaurentPoly::str() const { return spaced_ascending_str(c_); }

// ---------------- RatFunc ----------------

RatFunc::RatFunc(const ZPoly& n, const ZPoly& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = ZPoly(1);
    return;
  }
  ZPoly g = gcd_zpoly(num_, den_);
  num_ = divexact(num_, g);
  den_ = divexact(den_, g);
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::from_laurent(const LaurentPoly& l) {
  if (l.is_zero()) return RatFunc();
  int shift = l.min_exponent() < 0 ? -l.min_exponent() : 0;
  return RatFunc(l.shifted(shift).to_zpoly(), ZPoly::monomial(1, shift));
}

ZPoly RatFunc::to_zpoly() const {
  if (!is_polynomial()) throw Error(ErrorCode::Domain, "rational function is not a polynomial");
  return num_;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---------------- XPoly ----------------

XPoly::XPoly(const RatFunc& c) {
  if (!c.is_zero()) c_.push_back(c);
}

XPoly XPoly::from_coeffs(std::vector<RatFunc> ascending) {
  XPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatFunc XPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return RatFunc();
  return c_[k];
}

XPoly XPoly::operator+(const XPoly& o) const {
  std::vector<RatFunc> out(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return from_coeffs(std::move(out));
}

XPoly XPoly::operator*(const XPoly& o) const {
  if (is_zero() || o.is_zero()) return XPoly();
  std::vector<RatFunc> out(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] = out[i + j] + c_[i] * o.c_[j];
  return from_coeffs(std::move(out));
}

XPoly XPoly::operator*(const RatFunc& s) const {
  std::vector<RatFunc> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return from_coeffs(std::move(out));
}

RatFunc XPoly::eval(const RatFunc& x) const {
  RatFunc acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string XPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  for (int k = degree(); k >= 0; --k) {
    out << "(" << c_[k].str() << ")";
    if (k == 1)
      out << "*x";
    else if (k > 1)
      out << "*x^" << k;
    if (k > 0) out << " + ";
  }
  return out.str();
}

// ---------------- BivarPoly ----------------

BivarPoly BivarPoly::from_slices(std::map<int, ZPoly> slices) {
  BivarPoly p;
  for (auto& [k, s] : slices) {
    if (k < 0) throw Error(ErrorCode::Domain, "x-degree must be nonnegative");
    if (!s.is_zero()) p.s_[k] = std::move(s);
  }
  return p;
}

int BivarPoly::x_degree() const { return s_.empty() ? -1 : s_.rbegin()->first; }

ZPoly BivarPoly::slice(int x_deg) const {
  auto it = s_.find(x_deg);
  return it == s_.end() ? ZPoly() : it->second;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  std::map<int, ZPoly> out = s_;
  for (const auto& [k, s] : o.s_) out[k] += s;
  return from_slices(std::move(out));
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  std::map<int, ZPoly> out;
  for (const auto& [ka, sa] : s_)
    for (const auto& [kb, sb] : o.s_) out[ka + kb] += sa * sb;
  return from_slices(std::move(out));
}

BivarPoly BivarPoly::operator*(const ZPoly& s) const {
  std::map<int, ZPoly> out;
  for (const auto& [k, sl] : s_) out[k] = sl * s;
  return from_slices(std::move(out));
}

mpz_class BivarPoly::eval(const mpz_class& q, const mpz_class& x) const {
  mpz_class acc = 0;
  int prev = -1;
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) {
    if (prev >= 0)
      for (int i = it->first; i < prev; ++i) acc *= x;
    acc += it->second.eval(q);
    prev = it->first;
  }
  for (int i = 0; i < prev; ++i) acc *= x;
  return acc;
}

std::vector<std::pair<long, long>> BivarPoly::support() const {
  std::vector<std::pair<long, long>> pts;
  for (const auto& [k, s] : s_)
    for (const auto& [e, c] : s.coeffs()) pts.emplace_back(e, k);
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::string BivarPoly::str() const {
  if (s_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) {
    int k = it->first;
    const ZPoly& sl = it->second;
    std::string xs = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    std::string term;
    bool neg = false;
    if (sl.coeffs().size() > 1) {
      term = "(" + sl.str_compact() + ")";
      if (!xs.empty()) term += "*" + xs;
    } else {
      const auto& [e, c] = *sl.coeffs().begin();
      neg = c < 0;
      mpz_class mag = abs(c);
      std::vector<std::string> parts;
      if (mag != 1 || (e == 0 && k == 0)) parts.push_back(mag.get_str());
      if (e > 0) parts.push_back(e == 1 ? "q" : "q^" + std::to_string(e));
      if (!xs.empty()) parts.push_back(xs);
      for (size_t i = 0; i < parts.size(); ++i) term += (i ? "*" : "") + parts[i];
    }
    if (first) {
      out << (neg ? "-" : "") << term;
      first = false;
    } else {
      out << (neg ? " - " : " + ") << term;
    }
  }
  return out.str();
}

ZPoly content_q(const BivarPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "content of the zero polynomial");
  ZPoly g;
  for (const auto& [k, s] : f.slices()) g = g.is_zero() ? s : gcd_zpoly(g, s);
  return g.leading_coeff() < 0 ? -g : g;
}

BivarPoly exact_div(const BivarPoly& f, const ZPoly& d) {
  std::map<int, ZPoly> out;
  for (const auto& [k, s] : f.slices()) out[k] = divexact(s, d);
  return BivarPoly::from_slices(std::move(out));
}

// ---------------- q-analogs ----------------

LaurentPoly q_int(long n) {
  LaurentPoly r;
  if (n >= 0) {
    for (long e = 0; e < n; ++e) r += LaurentPoly::monomial(1, static_cast<int>(e));
  } else {
    for (long e = n; e < 0; ++e) r += LaurentPoly::monomial(-1, static_cast<int>(e));
  }
  return r;
}

ZPoly q_int_poly(long n) {
  if (n < 0) throw Error(ErrorCode::Domain, "q_int_poly requires n >= 0");
  std::map<int, mpz_class> c;
  for (long e = 0; e < n; ++e) c[static_cast<int>(e)] = 1;
  return ZPoly::from_coeffs(std::move(c));
}

ZPoly q_factorial(int n) {
  if (n < 0) throw Error(ErrorCode::Domain, "q_factorial requires n >= 0");
  ZPoly r(1);
  for (int i = 1; i <= n; ++i) r = r * q_int_poly(i);
  return r;
}

ZPoly q_binom(int n, int k) {
  if (k < 0 || n < k) throw Error(ErrorCode::Domain, "q_binom requires n >= k >= 0");
  // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<ZPoly> row(static_cast<size_t>(k) + 1);
  row[0] = ZPoly(1);
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + row[j].shifted(j);
  return row[k];
}

// ---------------- interpolation ----------------

XPoly lagrange_interpolate(const std::vector<std::pair<RatFunc, RatFunc>>& points) {
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw Error(ErrorCode::DuplicateNode, "repeated interpolation abscissa");
  XPoly result;
  for (size_t i = 0; i < points.size(); ++i) {
    XPoly basis(RatFunc(1));
    RatFunc denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * XPoly::from_coeffs({-points[j].first, RatFunc(1)});
      denom = denom * (points[i].first - points[j].first);
    }
    result = result + basis * (points[i].second / denom);
  }
  return result;
}

}  // namespace qnewton
