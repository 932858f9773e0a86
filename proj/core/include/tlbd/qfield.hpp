#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

#include "tlbd/errors.hpp"

namespace tlbd {

/// Exact rational scalar.  mpq_class keeps gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

/// Laurent polynomial in q with exact rational coefficients, stored as a
/// sparse exponent -> coefficient map.  No zero coefficient is ever stored;
/// the zero polynomial is the empty map.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long constant);  // NOLINT(google-explicit-constructor)
  explicit Laurent(const Rational& constant);

  /// c * q^e
  static Laurent monomial(const Rational& c, long e);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  long min_exp() const;  ///< requires nonzero
  long max_exp() const;  ///< requires nonzero
  const std::map<long, Rational>& coeffs() const { return c_; }
  Rational coeff(long e) const;

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;

  /// Multiply by q^s.
  Laurent shifted(long s) const;

  /// Exact substitution q = q0.  q0 = 0 with negative exponents is a pole.
  Rational eval(const Rational& q0) const;

  /// Exact polynomial quotient; throws if the division is not exact.
  Laurent divided_exactly_by(const Laurent& d) const;

  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  auto operator<=>(const Laurent& o) const { return c_ <=> o.c_; }

  std::string str() const;

  void set(long e, const Rational& v);  ///< insert/overwrite, dropping zeros
  void add(long e, const Rational& v);

 private:
  std::map<long, Rational> c_;
};

/// gcd of the two polynomials after shifting both to lowest exponent 0,
/// computed by a primitive pseudo-remainder sequence over Z[q].  The result
/// has lowest exponent 0 and lowest coefficient +1.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

/// Reduced fraction of Laurent polynomials: the ground field Q(q).
///
/// Canonical form: den != 0; den has lowest exponent 0 and lowest
/// coefficient +1; gcd(num, den) = 1 after shifting to lowest exponent 0.
/// Equality of canonical forms is structural, so == decides field equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const Rational& r) : num_(r), den_(1) {}
  RatFunc(Laurent n);  // NOLINT(google-explicit-constructor)
  RatFunc(Laurent n, Laurent d);

  static RatFunc monomial(const Rational& c, long e) {
    return RatFunc(Laurent::monomial(c, e));
  }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  auto operator<=>(const RatFunc& o) const {
    if (auto c = num_ <=> o.num_; c != 0) return c;
    return den_ <=> o.den_;
  }

  /// Exact value at q = q0; throws pole_error if the denominator vanishes
  /// there (reduction already happened at construction).
  Rational eval_at(const Rational& q0) const;

  /// Sparse sum syntax, e.g. "3/2*q^-2 + 1 - 5*q^3", with "(num)/(den)"
  /// when the denominator is nontrivial.  print/parse round-trip exactly.
  std::string str() const;
  static RatFunc parse(const std::string& text);

 private:
  void canonicalize();
  Laurent num_, den_;
};

/// Quantum integer [n] = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial:
/// q^{n-1} + q^{n-3} + ... + q^{1-n} for n > 0, 0 for n = 0, -[-n] for n < 0.
RatFunc qint(long n);

/// q^n + q^-n; shows up in every type B/D recursion coefficient.
RatFunc q_pow_sum(long n);

}  // namespace tlbd
