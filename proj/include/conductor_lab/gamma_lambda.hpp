#pragma once

// Local gamma factors: F(chi(x)|x|^{s-1}) = Gamma(chi, s) chi^{-1}(y) |y|^{-s},
// and Lambda(chi, s) = -Gamma'(chi, s) / Gamma(chi, s).

#include <complex>
#include <stdexcept>

#include "conductor_lab/characters.hpp"

namespace conductor_lab {

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluations closer than this to a pole raise PoleError.
inline constexpr double kPoleTolerance = 1e-8;

struct CriticalPoint {
  std::complex<double> s;
  bool on_critical_line = false;

  static CriticalPoint at(std::complex<double> s) {
    return {s, std::abs(s.real() - 0.5) <= 1e-14};
  }
  static CriticalPoint on_line(double tau) { return {{0.5, tau}, true}; }
};

/// sum over units u mod p^c of chi_0(u) exp(2 pi i u / p^c)
std::complex<double> gauss_sum(const FiniteCharacter& chi);

std::complex<double> gamma_finite(const FiniteCharacter& chi, std::complex<double> s);
std::complex<double> lambda_finite(const FiniteCharacter& chi, std::complex<double> s);

std::complex<double> gamma_real(const RealCharacter& chi, std::complex<double> s);
std::complex<double> lambda_real(const RealCharacter& chi, std::complex<double> s);

/// -(c + delta) log q, for a local field with residue cardinality q and
/// different exponent delta.
ExactScalar lambda_ramified_parametric(int q, int delta, int c);

}  // namespace conductor_lab
