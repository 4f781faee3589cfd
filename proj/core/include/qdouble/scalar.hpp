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

#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdouble {

using Rational = mpq_class;

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParameterMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial with integer coefficients, ascending order,
/// no trailing zeros (the zero polynomial is the empty vector).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const;
  bool is_monomial() const;
  const mpz_class& lead() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int i) const;

  mpz_class content() const;
  IntPoly primitive_part() const;
  IntPoly shifted_down(int k) const;

  Rational evaluate(const Rational& x) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Exact division; throws std::logic_error when `d` does not divide.
  IntPoly divexact(const IntPoly& d) const;
  IntPoly divexact(const mpz_class& d) const;

  /// Primitive gcd over Q[x], normalized to positive leading coefficient.
  friend IntPoly gcd(const IntPoly& a, const IntPoly& b);

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Element of Q(p) for a single named formal parameter p, kept as a reduced
/// fraction num/den. A constant carries no parameter and combines with any
/// parameter; mixing two different parameters throws ParameterMismatch.
class Scalar {
 public:
  Scalar() : den_(IntPoly::constant(1)) {}
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v);  // NOLINT(google-explicit-constructor)

  /// The formal parameter itself.
  static Scalar param(char name);
  /// c * p^e for any integer e.
  static Scalar monomial(char name, const Rational& c, int e);
  static Scalar from_fraction(char name, IntPoly num, IntPoly den);

  char parameter() const { return param_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant scalar; throws when the scalar depends on the parameter.
  Rational constant_value() const;
  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  Scalar inverse() const;
  Scalar pow(int e) const;

  /// Exact value at p = x; throws PoleError when the denominator vanishes.
  Rational evaluate(const Rational& x) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text, e.g. "(q^2+1)/(q^5)"; polynomials print bare.
  std::string str() const;

 private:
  void canonicalize();
  static char join(char a, char b);

  char param_ = 0;
  IntPoly num_;
  IntPoly den_;
};

std::string to_string(const IntPoly& p, char var);
std::string to_string(const Scalar& s);
std::string to_string(const Rational& r);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Scalar inverse(const Scalar& s) { return s.inverse(); }
Rational inverse(const Rational& r);

/// Field element types the algebra layers are instantiated over: exact
/// rational functions (EXACT mode) and rationals (SAMPLED mode).
template <class F>
concept Field = requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::same_as<bool>;
  F(1);
};

template <Field F>
F power(const F& x, int e) {
  F base = e < 0 ? F(1) / x : x;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  F r(1);
  while (n) {
    if (n & 1u) r = r * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return r;
}

/// q-integer (q^k - q^-k)/(q - q^-1), computed as the finite sum
/// q^(k-1) + q^(k-3) + ... + q^(1-k) so that q = 1 gives k.
template <Field F>
F qint_at(int k, const F& q) {
  if (k < 0) throw std::invalid_argument("qint: k must be nonnegative");
  F sum(0);
  for (int j = 0; j < k; ++j) sum = sum + power(q, k - 1 - 2 * j);
  return sum;
}

/// The q-integer k_q as a Scalar in the named parameter.
Scalar qint(int k, char param = 'q');

Rational evaluate(const Scalar& s, const Rational& value);

/// True iff value^(2k) = 1 for some 2 <= k <= bound.
bool is_root_of_unity_risk(const Rational& value, int bound);

/// Parses "p/q" or an integer.
Rational parse_rational(const std::string& text);

}  // namespace qdouble
