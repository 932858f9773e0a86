#include "tlbd/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace tlbd {

namespace {

// raw mpq_class(n, d) construction does not reduce; normalize at the boundary
Rational reduced(const Rational& v) {
  Rational r = v;
  r.canonicalize();
  return r;
}

}  // namespace

Laurent::Laurent(long constant) {
  if (constant != 0) c_[0] = Rational(constant);
}

Laurent::Laurent(const Rational& constant) {
  Rational v = reduced(constant);
  if (v != 0) c_[0] = v;
}

Laurent Laurent::monomial(const Rational& c, long e) {
  Laurent p;
  Rational v = reduced(c);
  if (v != 0) p.c_[e] = v;
  return p;
}

bool Laurent::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

long Laurent::min_exp() const { return c_.begin()->first; }
long Laurent::max_exp() const { return c_.rbegin()->first; }

Rational Laurent::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rational(0) : it->second;
}

void Laurent::set(long e, const Rational& v) {
  Rational cv = reduced(v);
  if (cv == 0)
    c_.erase(e);
  else
    c_[e] = cv;
}

void Laurent::add(long e, const Rational& v) {
  Rational cv = reduced(v);
  auto it = c_.find(e);
  if (it == c_.end()) {
    if (cv != 0) c_[e] = cv;
    return;
  }
  it->second += cv;
  if (it->second == 0) c_.erase(it);
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, v] : o.c_) r.add(e, v);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, v] : o.c_) r.add(e, -v);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.add(e1 + e2, v1 * v2);
  return r;
}

Laurent Laurent::shifted(long s) const {
  Laurent r;
  for (const auto& [e, v] : c_) r.c_[e + s] = v;
  return r;
}

Rational Laurent::eval(const Rational& q0) const {
  if (is_zero()) return Rational(0);
  if (q0 == 0 && min_exp() < 0)
    throw pole_error("Laurent::eval: negative exponent at q = 0");
  Rational acc(0);
  for (const auto& [e, v] : c_) {
    Rational p(1);
    Rational base = q0;
    long n = e;
    if (n < 0) {
      base = Rational(1) / q0;
      n = -n;
    }
    for (long i = 0; i < n; ++i) p *= base;
    acc += v * p;
  }
  return acc;
}

Laurent Laurent::divided_exactly_by(const Laurent& d) const {
  if (d.is_zero()) throw division_by_zero("Laurent division by zero");
  if (is_zero()) return Laurent();
  // Long division from the top degree.  An exact Laurent quotient has
  // max exp = a.max - d.max and min exp = a.min - d.min, which bounds the
  // descent and makes inexact input detectable.
  Laurent rem = *this;
  Laurent quo;
  const long dtop = d.max_exp();
  const Rational dlead = d.coeff(dtop);
  const long quo_min = min_exp() - d.min_exp();
  while (!rem.is_zero() && rem.max_exp() - dtop >= quo_min) {
    const long shift = rem.max_exp() - dtop;
    const Rational f = rem.coeff(rem.max_exp()) / dlead;
    quo.add(shift, f);
    rem = rem - d.shifted(shift) * Laurent(f);
  }
  if (!rem.is_zero()) throw contract_violation("Laurent division not exact");
  return quo;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, v] : c_) {  // ascending exponent
    Rational a = v;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

// --- integer polynomial helpers for the primitive PRS gcd -----------------

using ZPoly = std::map<long, mpz_class>;  // exponent -> nonzero coefficient

long zdeg(const ZPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

void zadd(ZPoly& p, long e, const mpz_class& v) {
  auto it = p.find(e);
  if (it == p.end()) {
    if (v != 0) p[e] = v;
    return;
  }
  it->second += v;
  if (it->second == 0) p.erase(it);
}

ZPoly zscale(const ZPoly& p, const mpz_class& c) {
  ZPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : p) r[e] = v * c;
  return r;
}

ZPoly zmul_mono(const ZPoly& p, const mpz_class& c, long s) {
  ZPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : p) r[e + s] = v * c;
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  for (const auto& [e, v] : b) zadd(r, e, -v);
  return r;
}

mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& [e, v] : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

// primitive part with positive lowest coefficient
ZPoly zprimitive(const ZPoly& p) {
  if (p.empty()) return p;
  mpz_class g = zcontent(p);
  if (p.begin()->second < 0) g = -g;
  ZPoly r;
  for (const auto& [e, v] : p) r[e] = v / g;
  return r;
}

// pseudo-remainder: lead(b)^(deg a - deg b + 1) * a  mod  b
ZPoly zprem(ZPoly a, const ZPoly& b) {
  long db = zdeg(b);
  const mpz_class lb = b.rbegin()->second;
  while (!a.empty() && zdeg(a) >= db) {
    long da = zdeg(a);
    mpz_class la = a.rbegin()->second;
    a = zsub(zscale(a, lb), zmul_mono(b, la, da - db));
  }
  return a;
}

// Laurent (assumed shifted to min exponent 0) -> primitive ZPoly
ZPoly to_zpoly(const Laurent& p) {
  mpz_class lcm = 1;
  for (const auto& [e, v] : p.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  ZPoly z;
  for (const auto& [e, v] : p.coeffs()) {
    Rational s = v * Rational(lcm);
    z[e] = s.get_num();
  }
  return zprimitive(z);
}

Laurent from_zpoly(const ZPoly& z) {
  Laurent p;
  for (const auto& [e, v] : z) p.set(e, Rational(v));
  return p;
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  if (a.is_zero()) return laurent_gcd(b, a);
  Laurent a0 = a.shifted(-a.min_exp());
  if (b.is_zero()) {
    // normalize: lowest coefficient +1
    return a0 * Laurent(Rational(1) / a0.coeff(0));
  }
  Laurent b0 = b.shifted(-b.min_exp());
  ZPoly r0 = to_zpoly(a0), r1 = to_zpoly(b0);
  if (zdeg(r0) < zdeg(r1)) std::swap(r0, r1);
  while (!r1.empty()) {
    ZPoly r2 = zprimitive(zprem(r0, r1));
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  Laurent g = from_zpoly(zprimitive(r0));
  if (g.is_zero()) return Laurent(1);
  long s = g.min_exp();
  g = g.shifted(-s);
  return g * Laurent(Rational(1) / g.coeff(0));
}

RatFunc::RatFunc(Laurent n) : num_(std::move(n)), den_(1) {}

RatFunc::RatFunc(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw division_by_zero("RatFunc: zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  // absorb the denominator's q-shift into the numerator
  long sd = den_.min_exp();
  den_ = den_.shifted(-sd);
  num_ = num_.shifted(-sd);
  if (!den_.is_one()) {
    long sn = num_.min_exp();
    Laurent n0 = num_.shifted(-sn);
    Laurent g = laurent_gcd(n0, den_);
    if (!g.is_one()) {
      n0 = n0.divided_exactly_by(g);
      den_ = den_.divided_exactly_by(g);
    }
    num_ = n0.shifted(sn);
  }
  // unit normalization: den lowest coefficient exactly +1
  Rational c = den_.coeff(den_.min_exp());
  if (c != 1) {
    Laurent inv{Rational(1) / c};
    den_ = den_ * inv;
    num_ = num_ * inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    RatFunc r;
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    if (r.num_.is_zero()) r.den_ = Laurent(1);
    if (!r.den_.is_one() && !r.num_.is_zero()) {
      // a common denominator can now share a factor with the sum
      return RatFunc(r.num_, r.den_);
    }
    return r;
  }
  // with reduced operands, only gcd(t, g) can cancel (g = gcd of the
  // denominators), so the coprime case needs no reduction at all
  Laurent g = laurent_gcd(den_, o.den_);
  RatFunc r;
  if (g.is_one()) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  } else {
    Laurent t = num_ * o.den_.divided_exactly_by(g) + o.num_ * den_.divided_exactly_by(g);
    if (t.is_zero()) return RatFunc();
    Laurent h = laurent_gcd(t, g);
    if (h.is_one()) {
      r.num_ = std::move(t);
      r.den_ = den_ * o.den_.divided_exactly_by(g);
    } else {
      r.num_ = t.divided_exactly_by(h);
      r.den_ = den_.divided_exactly_by(h) * o.den_.divided_exactly_by(g);
    }
  }
  if (r.num_.is_zero()) r.den_ = Laurent(1);
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    RatFunc r;
    r.num_ = num_ * o.num_;
    return r;
  }
  // cross-cancel; the product of the reduced parts is already canonical
  Laurent a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one() && !a.is_zero()) {
    Laurent g = laurent_gcd(a, d);
    if (!g.is_one()) {
      a = a.divided_exactly_by(g);
      d = d.divided_exactly_by(g);
    }
  }
  if (!b.is_one() && !c.is_zero()) {
    Laurent g = laurent_gcd(c, b);
    if (!g.is_one()) {
      c = c.divided_exactly_by(g);
      b = b.divided_exactly_by(g);
    }
  }
  RatFunc r;
  r.num_ = a * c;
  r.den_ = b * d;
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw division_by_zero("RatFunc: division by zero");
  if (is_zero()) return RatFunc();
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw division_by_zero("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval_at(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (d == 0) throw pole_error("RatFunc::eval_at: pole at q0");
  return num_.eval(q0) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
};

mpz_class parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
  size_t digits = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == digits) throw parse_error("expected integer in '" + c.s + "'");
  return mpz_class(c.s.substr(start, c.i - start));
}

// one term:  [rational] [* q[^exp]]  |  q[^exp]
Laurent parse_term(Cursor& c, bool negative) {
  Rational coeff(1);
  bool have_coeff = false;
  if (c.peek() != 'q') {
    mpz_class n = parse_integer(c);
    mpz_class d = 1;
    if (c.peek() == '/') {
      c.take();
      d = parse_integer(c);
      if (d == 0) throw parse_error("zero denominator in rational coefficient");
    }
    coeff = Rational(n, d);
    coeff.canonicalize();
    have_coeff = true;
    if (c.peek() == '*') c.take();
  }
  long exp = 0;
  if (c.peek() == 'q') {
    c.take();
    exp = 1;
    if (c.peek() == '^') {
      c.take();
      exp = static_cast<long>(parse_integer(c).get_si());
    }
  } else if (!have_coeff) {
    throw parse_error("expected term in '" + c.s + "'");
  }
  if (negative) coeff = -coeff;
  return Laurent::monomial(coeff, exp);
}

Laurent parse_poly(const std::string& text) {
  Cursor c{text};
  Laurent acc;
  bool neg = false;
  if (c.peek() == '+' || c.peek() == '-') neg = (c.take() == '-');
  acc = acc + parse_term(c, neg);
  while (!c.eof()) {
    char op = c.take();
    if (op != '+' && op != '-') throw parse_error(std::string("unexpected '") + op + "' in '" + text + "'");
    acc = acc + parse_term(c, op == '-');
  }
  return acc;
}

}  // namespace

RatFunc RatFunc::parse(const std::string& text) {
  // "(num)/(den)" form: match a top-level (...)/(...)
  Cursor c{text};
  if (c.peek() == '(') {
    size_t open = c.i;
    int depth = 0;
    size_t close = std::string::npos;
    for (size_t j = open; j < text.size(); ++j) {
      if (text[j] == '(') ++depth;
      if (text[j] == ')') {
        --depth;
        if (depth == 0) {
          close = j;
          break;
        }
      }
    }
    if (close != std::string::npos) {
      size_t k = close + 1;
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k < text.size() && text[k] == '/') {
        ++k;
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        if (k < text.size() && text[k] == '(') {
          size_t last = text.find_last_of(')');
          if (last == std::string::npos || last <= k) throw parse_error("unbalanced ')' in '" + text + "'");
          Laurent n = parse_poly(text.substr(open + 1, close - open - 1));
          Laurent d = parse_poly(text.substr(k + 1, last - k - 1));
          return RatFunc(std::move(n), std::move(d));
        }
      }
    }
  }
  return RatFunc(parse_poly(text));
}

RatFunc qint(long n) {
  if (n == 0) return RatFunc();
  if (n < 0) return -qint(-n);
  Laurent p;
  for (long e = n - 1; e >= 1 - n; e -= 2) p.set(e, Rational(1));
  return RatFunc(std::move(p));
}

RatFunc q_pow_sum(long n) {
  Laurent p;
  p.set(n, Rational(1));
  p.add(-n, Rational(1));
  return RatFunc(std::move(p));
}

}  // namespace tlbd
