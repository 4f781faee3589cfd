// Copyright 2026 The qdouble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdouble/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qdouble {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int IntPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

bool IntPoly::is_monomial() const {
  return !c_.empty() && valuation() == degree();
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (sgn(lead()) < 0) g = -g;
  return divexact(g);
}

IntPoly IntPoly::shifted_down(int k) const {
  if (k == 0 || is_zero()) return *this;
  return IntPoly(std::vector<mpz_class>(c_.begin() + k, c_.end()));
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const mpz_class& c, const IntPoly& a) {
  if (sgn(c) == 0) return {};
  IntPoly r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

IntPoly IntPoly::divexact(const mpz_class& d) const {
  IntPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("IntPoly: division by zero");
  if (is_zero()) return {};
  if (d.degree() == 0) {
    for (const auto& c : c_)
      if (!mpz_divisible_p(c.get_mpz_t(), d.lead().get_mpz_t()))
        throw std::logic_error("IntPoly::divexact: inexact division");
    return divexact(d.lead());
  }
  if (d.is_monomial()) {
    const int v = d.valuation();
    if (valuation() < v) throw std::logic_error("IntPoly::divexact: inexact division");
    return shifted_down(v).divexact(IntPoly::constant(d.lead()));
  }
  std::vector<mpz_class> rem = c_;
  const int dd = d.degree();
  const int qd = degree() - dd;
  if (qd < 0) throw std::logic_error("IntPoly::divexact: inexact division");
  std::vector<mpz_class> quo(static_cast<size_t>(qd) + 1);
  for (int i = qd; i >= 0; --i) {
    mpz_class& top = rem[static_cast<size_t>(i + dd)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t()))
      throw std::logic_error("IntPoly::divexact: inexact division");
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
    quo[static_cast<size_t>(i)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i + j)] -= f * d.c_[static_cast<size_t>(j)];
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) throw std::logic_error("IntPoly::divexact: inexact division");
  return IntPoly(std::move(quo));
}

namespace {

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  std::vector<mpz_class> r = a.coeffs();
  const mpz_class& lb = b.lead();
  int da = static_cast<int>(r.size()) - 1;
  while (da >= db) {
    const mpz_class la = r[static_cast<size_t>(da)];
    if (sgn(la) != 0) {
      for (auto& c : r) c *= lb;
      for (int j = 0; j <= db; ++j)
        r[static_cast<size_t>(da - db + j)] -= la * b.coeffs()[static_cast<size_t>(j)];
    }
    r.pop_back();
    --da;
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.degree() == 0 || b.degree() == 0) return IntPoly::constant(1);
  const int v = std::min(a.valuation(), b.valuation());
  if (a.is_monomial() || b.is_monomial()) return IntPoly::monomial(1, v);
  IntPoly x = a.shifted_down(a.valuation()).primitive_part();
  IntPoly y = b.shifted_down(b.valuation()).primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = IntPoly::constant(1);
      break;
    }
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  x = x.primitive_part();
  if (v > 0) x = x * IntPoly::monomial(1, v);
  return x;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long v) : num_(IntPoly::constant(v)), den_(IntPoly::constant(1)) {}

Scalar::Scalar(const Rational& v)
    : num_(IntPoly::constant(v.get_num())), den_(IntPoly::constant(v.get_den())) {}

Scalar Scalar::param(char name) { return monomial(name, 1, 1); }

Scalar Scalar::monomial(char name, const Rational& c, int e) {
  Scalar s;
  s.param_ = e == 0 ? 0 : name;
  if (e >= 0) {
    s.num_ = IntPoly::monomial(c.get_num(), e);
    s.den_ = IntPoly::constant(c.get_den());
  } else {
    s.num_ = IntPoly::constant(c.get_num());
    s.den_ = IntPoly::monomial(c.get_den(), -e);
  }
  s.canonicalize();
  return s;
}

Scalar Scalar::from_fraction(char name, IntPoly num, IntPoly den) {
  if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
  Scalar s;
  s.param_ = name;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.canonicalize();
  return s;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    param_ = 0;
    return;
  }
  if (den_.degree() > 0) {
    IntPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  if (sgn(den_.lead()) < 0) cd = -cd;
  if (cn != 1) num_ = num_.divexact(cn);
  if (cd != 1) den_ = den_.divexact(cd);
  Rational ratio(cn, cd);
  ratio.canonicalize();
  if (ratio.get_num() != 1) num_ = ratio.get_num() * num_;
  if (ratio.get_den() != 1) den_ = ratio.get_den() * den_;
  if (num_.degree() <= 0 && den_.degree() == 0) param_ = 0;
}

char Scalar::join(char a, char b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw ParameterMismatch(std::string("Scalar: cannot mix parameters '") + a + "' and '" + b + "'");
}

Rational Scalar::constant_value() const {
  if (!is_constant()) throw std::logic_error("Scalar::constant_value: not a constant");
  Rational r(num_.coeff(0), den_.coeff(0));
  r.canonicalize();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  Scalar s;
  s.param_ = param_;
  s.num_ = den_;
  s.den_ = num_;
  if (sgn(s.den_.lead()) < 0) {
    s.num_ = -s.num_;
    s.den_ = -s.den_;
  }
  return s;
}

Scalar Scalar::pow(int e) const { return power(*this, e); }

Rational Scalar::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (sgn(d) == 0) throw PoleError("Scalar::evaluate: pole at " + x.get_str() + " of " + str());
  Rational r = num_.evaluate(x) / d;
  r.canonicalize();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  param_ = join(param_, o.param_);
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  param_ = join(param_, o.param_);
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
  }
  // Cross-cancel before multiplying to keep the gcd work small.
  IntPoly g1 = gcd(num_, o.den_);
  IntPoly g2 = gcd(o.num_, den_);
  IntPoly a = g1.degree() > 0 ? num_.divexact(g1) : num_;
  IntPoly d = g1.degree() > 0 ? o.den_.divexact(g1) : o.den_;
  IntPoly c = g2.degree() > 0 ? o.num_.divexact(g2) : o.num_;
  IntPoly b = g2.degree() > 0 ? den_.divexact(g2) : den_;
  num_ = a * c;
  den_ = b * d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.num_ != b.num_ || a.den_ != b.den_) return false;
  return a.param_ == b.param_ || a.is_constant();
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    mpz_class c = p.coeff(i);
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      os << "-";
      c = -c;
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string Scalar::str() const {
  const char var = param_ ? param_ : 'q';
  if (den_.degree() == 0 && den_.lead() == 1) return to_string(num_, var);
  return "(" + to_string(num_, var) + ")/(" + to_string(den_, var) + ")";
}

std::string to_string(const Scalar& s) { return s.str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Rational inverse(const Rational& r) {
  if (sgn(r) == 0) throw std::domain_error("Rational: inverse of zero");
  Rational x = 1 / r;
  x.canonicalize();
  return x;
}

Scalar qint(int k, char param) { return qint_at(k, Scalar::param(param)); }

Rational evaluate(const Scalar& s, const Rational& value) { return s.evaluate(value); }

bool is_root_of_unity_risk(const Rational& value, int bound) {
  if (bound < 2) throw std::invalid_argument("is_root_of_unity_risk: bound must be >= 2");
  Rational sq = value * value;
  Rational p = sq;
  for (int k = 2; k <= bound; ++k) {
    p *= sq;
    if (p == 1) return true;
  }
  return false;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
  r.canonicalize();
  return r;
}

}  // namespace qdouble
