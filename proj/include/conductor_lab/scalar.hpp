#pragma once

#include <cmath>
#include <complex>

#include "conductor_lab/exact_scalar.hpp"

namespace conductor_lab {

using Complex = std::complex<double>;

/// Uniform access to the two value domains of function-space computations.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactScalar> {
  static constexpr bool exact = true;
  static ExactScalar zero() { return {}; }
  static ExactScalar from_rational(int, const Rational& r) { return ExactScalar(r); }
  static ExactScalar log_p(int p, const Rational& c) { return ExactScalar::log_p(p, c); }
  static ExactScalar sqrt_p_power(int p, int k) { return ExactScalar::sqrt_p_power(p, k); }
  static ExactScalar conj(const ExactScalar& s) { return s; }
  static Complex to_complex(int p, const ExactScalar& s) { return s.to_complex(p); }
  static bool is_zero(const ExactScalar& s) { return s.is_zero(); }
  static ExactScalar scale(const ExactScalar& s, const Rational& r) { return s * r; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex from_rational(int, const Rational& r) { return {r.get_d(), 0.0}; }
  static Complex log_p(int p, const Rational& c) { return {c.get_d() * std::log(double(p)), 0.0}; }
  static Complex sqrt_p_power(int p, int k) { return {std::pow(double(p), 0.5 * k), 0.0}; }
  static Complex conj(const Complex& s) { return std::conj(s); }
  static Complex to_complex(int, const Complex& s) { return s; }
  static bool is_zero(const Complex& s) { return s == Complex{}; }
  static Complex scale(const Complex& s, const Rational& r) { return s * r.get_d(); }
};

}  // namespace conductor_lab
