#pragma once

// Independent numerical routes to Gamma(chi, s), used to certify the closed
// forms. Both evaluate the defining relation
//
//   F(chi(x) |x|^{s-1}) = Gamma(chi, s) chi^{-1}(y) |y|^{-s}
//
// directly rather than through any formula for Gamma.

#include <complex>

#include "conductor_lab/characters.hpp"
#include "conductor_lab/padic_point.hpp"

namespace conductor_lab::oracle {

/// int chi(t) |t|^{s-1} lambda(t y) dt, shell by shell. Shells with |ty| <= 1
/// are summed as a geometric series (needs Re s > 0); the remaining shells
/// are finite coset sums, carried on until they vanish identically.
std::complex<double> homogeneous_fourier_at(const FiniteCharacter& chi, std::complex<double> s, const PAdicPoint& y);

/// homogeneous_fourier_at / (chi^{-1}(y) |y|^{-s})
std::complex<double> gamma_finite(const FiniteCharacter& chi, std::complex<double> s, const PAdicPoint& y);

/// Gamma from the pairing of chi(x)|x|^{s-1} with F(psi), psi(y) = exp(-2 pi y^2)
/// (even) or y exp(-2 pi y^2) (odd); F(psi) is computed by quadrature and the
/// Mellin-type integrals by the trapezoid rule in log x. Needs 0 < Re s < 1.
std::complex<double> gamma_real(const RealCharacter& chi, std::complex<double> s);

/// -Gamma'/Gamma from the oracle by a 5-point central difference in s.
std::complex<double> lambda_real(const RealCharacter& chi, std::complex<double> s, double step = 1e-3);

}  // namespace conductor_lab::oracle
