#include "conductor_lab/exact_scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace conductor_lab {

Rational pow_p(int p, int k) {
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(n);
  Rational r(1, 1);
  r /= Rational(n);
  return r;
}

ExactScalar::ExactScalar(int p, Rational u0, Rational u1, Rational v0, Rational v1)
    : p_(p), u0_(std::move(u0)), u1_(std::move(u1)), v0_(std::move(v0)), v1_(std::move(v1)) {
  u0_.canonicalize();
  u1_.canonicalize();
  v0_.canonicalize();
  v1_.canonicalize();
}

ExactScalar ExactScalar::log_p(int p, const Rational& coeff) {
  return ExactScalar(p, 0, 0, coeff, 0);
}

ExactScalar ExactScalar::sqrt_p_power(int p, int k) {
  // p^{k/2} = p^{floor(k/2)} * sqrt(p)^{k mod 2}
  const int half = (k >= 0) ? k / 2 : -((-k + 1) / 2);
  const int odd = k - 2 * half;
  if (odd == 0) return ExactScalar(p, pow_p(p, half), 0, 0, 0);
  return ExactScalar(p, 0, pow_p(p, half), 0, 0);
}

ExactScalar ExactScalar::parse(int p, const std::string& text) {
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational r;
    if (r.set_str(item, 10) != 0) throw std::invalid_argument("bad rational '" + item + "'");
    r.canonicalize();
    parts.push_back(r);
  }
  if (parts.size() != 4) throw std::invalid_argument("exact scalar needs 4 rationals: '" + text + "'");
  return ExactScalar(p, parts[0], parts[1], parts[2], parts[3]);
}

bool ExactScalar::is_zero() const { return u0_ == 0 && u1_ == 0 && v0_ == 0 && v1_ == 0; }

int ExactScalar::unify(const ExactScalar& o) const {
  if (p_ == 0) return o.p_;
  if (o.p_ == 0 || o.p_ == p_) return p_;
  // the prime label only matters once log p or sqrt p appears
  if (is_rational()) return o.p_;
  if (o.is_rational()) return p_;
  throw std::invalid_argument("mixed primes in exact scalar");
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  p_ = unify(o);
  u0_ += o.u0_;
  u1_ += o.u1_;
  v0_ += o.v0_;
  v1_ += o.v1_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  p_ = unify(o);
  u0_ -= o.u0_;
  u1_ -= o.u1_;
  v0_ -= o.v0_;
  v1_ -= o.v1_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (has_log() && o.has_log()) throw std::domain_error("product of two log(p) terms");
  const int p = unify(o);
  // (a0 + a1 r)(b0 + b1 r) with r^2 = p
  auto mul = [p](const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1,
                 Rational& c0, Rational& c1) {
    c0 = a0 * b0;
    if (a1 != 0 && b1 != 0) c0 += a1 * b1 * p;
    c1 = a0 * b1 + a1 * b0;
  };
  Rational nu0, nu1, t0, t1, s0, s1;
  mul(u0_, u1_, o.u0_, o.u1_, nu0, nu1);
  mul(u0_, u1_, o.v0_, o.v1_, t0, t1);
  mul(v0_, v1_, o.u0_, o.u1_, s0, s1);
  p_ = p;
  u0_ = nu0;
  u1_ = nu1;
  v0_ = t0 + s0;
  v1_ = t1 + s1;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const Rational& r) {
  u0_ *= r;
  u1_ *= r;
  v0_ *= r;
  v1_ *= r;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const Rational& r) {
  if (r == 0) throw std::domain_error("division by zero");
  u0_ /= r;
  u1_ /= r;
  v0_ /= r;
  v1_ /= r;
  return *this;
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(p_, -u0_, -u1_, -v0_, -v1_); }

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.u0_ != b.u0_ || a.u1_ != b.u1_ || a.v0_ != b.v0_ || a.v1_ != b.v1_) return false;
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) return a.is_rational();
  return true;
}

double ExactScalar::to_double(int p) const {
  const int q = p_ != 0 ? p_ : p;
  if (q == 0 && !is_rational()) throw std::invalid_argument("unbound exact scalar has no numeric value");
  const double r = q > 0 ? std::sqrt(static_cast<double>(q)) : 0.0;
  const double l = q > 0 ? std::log(static_cast<double>(q)) : 0.0;
  return (u0_.get_d() + u1_.get_d() * r) + (v0_.get_d() + v1_.get_d() * r) * l;
}

std::string ExactScalar::to_fields() const {
  return u0_.get_str() + "," + u1_.get_str() + "," + v0_.get_str() + "," + v1_.get_str();
}

std::string ExactScalar::to_symbolic() const {
  return u0_.get_str() + "+" + u1_.get_str() + "*sqrt(p)+(" + v0_.get_str() + "+" + v1_.get_str() +
         "*sqrt(p))*log(p)";
}

}  // namespace conductor_lab
