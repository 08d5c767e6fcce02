#pragma once

// Unitary characters of Q_p^x and R^x.
//
// A finite character is chi(p^v u) = chi(p)^v * chi_0(u mod p^c). The unit
// part chi_0 is given by the images of fixed generators of (Z/p^c)^x:
//   odd p:          g, the smallest positive integer that is a primitive root mod p^2
//                   (hence mod every p^c)
//   p = 2, c = 2:   -1
//   p = 2, c >= 3:  -1 and 5
// Images are roots of unity, written as exact fractions of a full turn.
// chi(p) is stored as an angle in turns (a real number).

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "conductor_lab/exact_scalar.hpp"
#include "conductor_lab/function_space.hpp"
#include "conductor_lab/padic_point.hpp"

namespace conductor_lab {

/// Smallest positive primitive root modulo p^2 (odd p).
int primitive_root(int p);

class FiniteCharacter {
 public:
  static FiniteCharacter unramified(int p, double chi_p_turns = 0.0);

  /// Generator images in turns; their orders must divide the generator orders.
  FiniteCharacter(int p, int c, std::vector<Rational> generator_turns, double chi_p_turns = 0.0);

  /// Every character whose conductor exponent is exactly c.
  static std::vector<FiniteCharacter> with_conductor(int p, int c, double chi_p_turns = 0.0);

  int prime() const { return p_; }
  /// The stored (declared) conductor exponent.
  int c() const { return c_; }
  const std::vector<Rational>& generator_turns() const { return gen_turns_; }
  double chi_p_turns() const { return chi_p_turns_; }
  bool is_ramified() const { return c_ > 0; }

  /// chi_0(u) as a turn numerator over turn_denominator(); u a unit residue mod p^c.
  std::int64_t unit_turn(std::int64_t residue) const;
  std::int64_t turn_denominator() const { return den_; }
  std::complex<double> eval_unit(std::int64_t residue) const;
  std::complex<double> eval(const PAdicPoint& x) const;
  std::complex<double> value_at_p() const;
  /// chi(-1), always +1 or -1.
  int sign() const;

  /// Smallest c' with chi_0 trivial on 1 + p^{c'} Z_p, computed by evaluation.
  int conductor_exponent() const;

  /// x -> chi(x) |x|^{i tau}
  FiniteCharacter twist(double tau) const;
  FiniteCharacter inverse() const;
  FiniteCharacter conj() const { return inverse(); }
  /// chi_0 takes only the values +1, -1 and chi(p) is +1 or -1.
  bool is_real_valued() const;

  std::string to_spec() const;

 private:
  int p_;
  int c_;
  std::vector<Rational> gen_turns_;
  double chi_p_turns_;
  std::int64_t modulus_ = 1;
  std::int64_t den_ = 1;
  std::shared_ptr<const std::vector<std::int64_t>> table_;  // residue -> turn numerator, -1 off units
};

class RealCharacter {
 public:
  RealCharacter(bool odd, double tau = 0.0) : odd_(odd), tau_(tau) {}
  bool odd() const { return odd_; }
  double tau() const { return tau_; }
  int sign() const { return odd_ ? -1 : 1; }
  std::complex<double> eval(double x) const;
  RealCharacter twist(double t) const { return {odd_, tau_ + t}; }
  RealCharacter inverse() const { return {odd_, -tau_}; }
  RealCharacter conj() const { return inverse(); }
  std::string to_spec() const;

 private:
  bool odd_;
  double tau_;
};

/// Data-only record for a character of C^x.
struct ComplexCharacter {
  int n = 0;
  double tau = 0.0;
};

/// phi(t) = g(|t|) chi^{-1}(t), phi(0) = 0, where g maps the shell exponent k
/// (|t| = p^k) to a value. Zero outside the listed shells.
FloatFunction homogeneous_section(const FiniteCharacter& chi, const std::map<int, Complex>& g);
/// Exact variant for real-valued characters and rational g.
ExactFunction homogeneous_section_exact(const FiniteCharacter& chi, const std::map<int, Rational>& g);

/// Parse "p:c:gen=T[,T2]:chi_p=T" (turns) or "p:0[:chi_p=T]".
FiniteCharacter parse_finite_character(const std::string& spec);
/// Parse "R:even|odd[:tau=X]".
RealCharacter parse_real_character(const std::string& spec);

}  // namespace conductor_lab
