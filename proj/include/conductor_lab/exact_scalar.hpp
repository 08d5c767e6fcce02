#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace conductor_lab {

using Rational = mpq_class;

/// p^k as an exact rational; k may be negative.
Rational pow_p(int p, int k);

/// Exact value (u0 + u1*sqrt(p)) + (v0 + v1*sqrt(p)) * log(p).
///
/// The prime is carried along once a sqrt(p) component appears. A scalar with
/// no sqrt(p) part is "unbound" (prime() == 0) and combines with any prime.
/// Products of two log-carrying scalars are rejected: every quantity the
/// conductor operator produces from rational input is at most linear in log p.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : u0_(v) {}  // NOLINT: implicit from integers is convenient
  ExactScalar(const Rational& r) : u0_(r) { u0_.canonicalize(); }  // NOLINT
  ExactScalar(int p, Rational u0, Rational u1, Rational v0, Rational v1);

  /// coeff * log p
  static ExactScalar log_p(int p, const Rational& coeff = 1);
  /// p^{k/2}, exact in Q(sqrt p)
  static ExactScalar sqrt_p_power(int p, int k);
  /// Parse the "u0,u1,v0,v1" file form.
  static ExactScalar parse(int p, const std::string& text);

  int prime() const { return p_; }
  const Rational& u0() const { return u0_; }
  const Rational& u1() const { return u1_; }
  const Rational& v0() const { return v0_; }
  const Rational& v1() const { return v1_; }

  bool is_zero() const;
  bool has_log() const { return v0_ != 0 || v1_ != 0; }
  bool has_sqrt() const { return u1_ != 0 || v1_ != 0; }
  bool is_rational() const { return !has_log() && !has_sqrt(); }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator*=(const Rational& r);
  ExactScalar& operator/=(const Rational& r);
  ExactScalar operator-() const;

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator*(ExactScalar a, const Rational& r) { return a *= r; }
  friend ExactScalar operator*(const Rational& r, ExactScalar a) { return a *= r; }
  friend ExactScalar operator/(ExactScalar a, const Rational& r) { return a /= r; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Real value; `p` is used when the scalar is unbound.
  double to_double(int p) const;
  std::complex<double> to_complex(int p) const { return {to_double(p), 0.0}; }

  /// "u0,u1,v0,v1"
  std::string to_fields() const;
  /// "u0+u1*sqrt(p)+(v0+v1*sqrt(p))*log(p)"
  std::string to_symbolic() const;

 private:
  int unify(const ExactScalar& o) const;

  int p_ = 0;
  Rational u0_{0}, u1_{0}, v0_{0}, v1_{0};
};

}  // namespace conductor_lab
