#pragma once

#include <complex>

namespace conductor_lab::special {

/// log Gamma(z) for complex z (any branch; only differences are exponentiated).
std::complex<double> lgamma(std::complex<double> z);

/// Digamma psi(z) = Gamma'(z) / Gamma(z) for complex z off the poles.
std::complex<double> digamma(std::complex<double> z);

/// log of Gamma_R(s) = pi^{-s/2} Gamma(s/2).
std::complex<double> log_gamma_r(std::complex<double> s);

/// Distance from z to the nearest non-positive integer.
double distance_to_pole(std::complex<double> z);

}  // namespace conductor_lab::special
