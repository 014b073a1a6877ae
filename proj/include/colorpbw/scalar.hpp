#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// A Scalar is a vector of rationals of length phi(N) giving the element in
// the power basis 1, z, ..., z^{phi(N)-1} modulo the N-th cyclotomic
// polynomial.  N = 1, 2 degrade to plain rationals.  A Scalar without an
// attached field is a plain rational and promotes on demand, so integer and
// rational literals mix freely with cyclotomic values of one fixed order.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace colorpbw {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

using Poly = std::vector<Rational>;  // coefficient list, index = power

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

// Divides in place, returns quotient; remainder stays in num.
inline Poly poly_divmod(Poly& num, const Poly& den) {
  Poly q;
  if (den.empty()) throw std::invalid_argument("polynomial division by zero");
  poly_trim(num);
  if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rational(0));
  while (num.size() >= den.size()) {
    Rational c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] += c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);  // the leading term cancels exactly, so the degree drops
  }
  poly_trim(q);
  return q;
}

inline Poly cyclotomic_polynomial(unsigned n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Poly> phi(n + 1);
  for (unsigned m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    Poly num(m + 1, Rational(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      Poly rem = num;
      Poly q = poly_divmod(rem, phi[d]);
      if (!rem.empty()) throw std::logic_error("cyclotomic division not exact");
      num = std::move(q);
    }
    phi[m] = std::move(num);
  }
  return phi[n];
}

}  // namespace detail

// Shared arithmetic context for one cyclotomic order N.
class CycField {
 public:
  static std::shared_ptr<const CycField> make(unsigned n) {
    return std::shared_ptr<const CycField>(new CycField(n));
  }

  unsigned order() const { return n_; }
  unsigned degree() const { return phi_; }
  const detail::Poly& modulus() const { return modulus_; }

  // Representation of zeta^k, k taken mod N.
  const std::vector<Rational>& zeta_power(long k) const {
    long r = k % static_cast<long>(n_);
    if (r < 0) r += n_;
    return zeta_pow_[static_cast<std::size_t>(r)];
  }

 private:
  explicit CycField(unsigned n) : n_(n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    modulus_ = detail::cyclotomic_polynomial(n);
    phi_ = static_cast<unsigned>(modulus_.size() - 1);
    // zeta^k tables by repeated shift-and-reduce
    std::vector<Rational> cur(phi_, Rational(0));
    cur[0] = 1;
    zeta_pow_.push_back(cur);
    for (unsigned k = 1; k < n_; ++k) {
      std::vector<Rational> next(phi_, Rational(0));
      // multiply by x: shift, reduce the overflow against the monic modulus
      Rational top = cur[phi_ - 1];
      for (unsigned i = phi_ - 1; i >= 1; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (top != 0)
        for (unsigned i = 0; i < phi_; ++i) next[i] -= top * modulus_[i];
      zeta_pow_.push_back(next);
      cur = std::move(next);
    }
  }

  unsigned n_;
  unsigned phi_;
  detail::Poly modulus_;
  std::vector<std::vector<Rational>> zeta_pow_;
};

using FieldPtr = std::shared_ptr<const CycField>;

class Scalar {
 public:
  Scalar() : coeffs_(1, Rational(0)) {}
  Scalar(long v) : coeffs_(1, Rational(v)) {}  // NOLINT: intentionally implicit
  Scalar(const Rational& v) : coeffs_(1, v) {}  // NOLINT: intentionally implicit
  Scalar(FieldPtr field, std::vector<Rational> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (field_ && coeffs_.size() != field_->degree())
      throw std::invalid_argument("scalar coefficient length mismatch");
  }

  static Scalar zeta(const FieldPtr& field, long k) {
    return Scalar(field, field->zeta_power(k));
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  // Rational value when the element lies in Q; throws otherwise.
  Rational rational_value() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) throw std::domain_error("scalar is not rational");
    return coeffs_[0];
  }

  friend Scalar operator-(const Scalar& a) {
    Scalar r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    auto [x, y, f] = aligned(a, b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return Scalar(f, std::move(x));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    auto [x, y, f] = aligned(a, b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return Scalar(f, std::move(x));
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    auto [x, y, f] = aligned(a, b);
    if (!f) return Scalar(x[0] * y[0]);
    detail::Poly px(x.begin(), x.end()), py(y.begin(), y.end());
    detail::poly_trim(px);
    detail::poly_trim(py);
    detail::Poly prod = detail::poly_mul(px, py);
    detail::poly_divmod(prod, f->modulus());  // keep the remainder
    prod.resize(f->degree(), Rational(0));
    return Scalar(f, std::vector<Rational>(prod.begin(), prod.end()));
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Multiplicative inverse; the modulus is irreducible over Q so every
  // nonzero element is invertible.
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (!field_) {
      return Scalar(Rational(1) / coeffs_[0]);
    }
    detail::Poly r0 = field_->modulus();
    detail::Poly r1(coeffs_.begin(), coeffs_.end());
    detail::poly_trim(r1);
    detail::Poly s0, s1{Rational(1)};
    while (!r1.empty()) {
      detail::Poly rem = r0;
      detail::Poly q = detail::poly_divmod(rem, r1);
      detail::Poly qs = detail::poly_mul(q, s1);
      detail::Poly s2 = s0;
      s2.resize(std::max(s2.size(), qs.size()), Rational(0));
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      detail::poly_trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("modulus not coprime to scalar");
    detail::Poly inv = s0;
    for (auto& c : inv) c /= r0[0];
    detail::poly_divmod(inv, field_->modulus());
    inv.resize(field_->degree(), Rational(0));
    return Scalar(field_, std::vector<Rational>(inv.begin(), inv.end()));
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar pow(unsigned long e) const {
    Scalar r(1), base = *this;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    auto [x, y, f] = aligned(a, b);
    (void)f;
    return x == y;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical text form: a plain rational, or a polynomial in z with
  // descending powers, e.g. "z^2-1/2".
  std::string str() const {
    if (!field_ || field_->degree() == 1) {
      std::ostringstream os;
      os << coeffs_[0];
      return os.str();
    }
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (out.empty())
        out += (c < 0) ? "-" : "";
      else
        out += (c < 0) ? "-" : "+";
      std::ostringstream os;
      os << mag;
      if (k == 0) {
        out += os.str();
      } else {
        if (mag != 1) out += os.str();
        out += "z";
        if (k >= 2) out += "^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  static std::tuple<std::vector<Rational>, std::vector<Rational>, FieldPtr> aligned(
      const Scalar& a, const Scalar& b) {
    FieldPtr f;
    if (a.field_ && b.field_) {
      if (a.field_->order() != b.field_->order())
        throw std::invalid_argument("mixing scalars of different cyclotomic orders");
      f = a.field_;
    } else {
      f = a.field_ ? a.field_ : b.field_;
    }
    auto lift = [&](const Scalar& s) {
      if (s.field_ || !f) return s.coeffs_;
      std::vector<Rational> v(f->degree(), Rational(0));
      v[0] = s.coeffs_[0];
      return v;
    };
    return {lift(a), lift(b), f};
  }

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

// Scalar literal parser.  Grammar: sum of terms, each term an optional
// rational coefficient followed by an optional z power ("3/4", "-z^2+1/2",
// "2z", "1/2*z^3").  A null field accepts only plain rationals.
inline Scalar parse_scalar(const std::string& text, const FieldPtr& field) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("bad scalar '" + text + "': " + msg);
  };
  if (text.empty()) fail("empty");
  Scalar total(0);
  bool any = false;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      fail("expected + or - between terms");
    }
    if (pos >= text.size()) fail("dangling sign");
    Rational coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      BigInt num(text.substr(start, pos - start));
      BigInt den(1);
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (dstart == pos) fail("missing denominator");
        den = BigInt(text.substr(dstart, pos - dstart));
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      saw_coeff = true;
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    long zpow = 0;
    if (pos < text.size() && text[pos] == 'z') {
      ++pos;
      zpow = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t estart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (estart == pos) fail("missing exponent");
        zpow = std::stol(text.substr(estart, pos - estart));
      }
    } else if (!saw_coeff) {
      fail("expected coefficient or z");
    }
    if (sign < 0) coeff = -coeff;
    Scalar term(coeff);
    if (zpow > 0) {
      if (!field) fail("root of unity in a rational-only context");
      term = term * Scalar::zeta(field, zpow);
    }
    total += term;
    any = true;
  }
  return total;
}

}  // namespace colorpbw
