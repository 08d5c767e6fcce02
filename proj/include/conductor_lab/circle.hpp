#pragma once

// L^2_inv(Q_p) as L^2(S^1): eta_i <-> z^i.
//
// The circle variable and the character twist are tied by z = p^{i tau}, so
// the multiplier of H at angle tau log p is -Lambda(1, 1/2 + i tau).

#include <complex>
#include <cstdint>
#include <vector>

#include "conductor_lab/conductor.hpp"
#include "conductor_lab/function_space.hpp"

namespace conductor_lab {

/// Laurent tails are dropped once the bound on the remaining mass is below this.
inline constexpr double kLaurentTailCutoff = 1e-14;
inline constexpr int kMaxToeplitzN = 4096;

/// sum_i c_i z^i over the window [lo, lo + size).
class LaurentVector {
 public:
  explicit LaurentVector(int p, int lo = 0, std::vector<Complex> coeffs = {});

  int prime() const { return p_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  bool empty() const { return c_.empty(); }
  const std::vector<Complex>& coefficients() const { return c_; }
  /// Zero outside the window.
  Complex operator[](int i) const;
  double norm() const;
  /// The same vector on a window containing [lo2, hi2].
  LaurentVector widened(int lo2, int hi2) const;
  /// Evaluate at z = exp(i angle).
  Complex eval(double angle) const;

 private:
  int p_;
  int lo_;
  std::vector<Complex> c_;
};

/// Max coefficient difference over the union of windows.
double max_abs_diff(const LaurentVector& u, const LaurentVector& v);

/// Coordinates in the eta basis; input must be radial and vanish near 0.
LaurentVector radial_to_laurent(const FloatFunction& f);
LaurentVector radial_to_laurent(const ExactFunction& f);
/// The image's shells on [lo, hi]; both the ball value and the tail decay geometrically.
LaurentVector radial_to_laurent(const FloatHImage& h, int lo, int hi);
FloatFunction laurent_to_radial(const LaurentVector& v);

/// m(z) = -2 log p Re(z / (sqrt p - z)) at z = exp(i angle).
double multiplier_m(int p, double angle);

/// Index window widening K such that the dropped symbol mass is below the cutoff.
int toeplitz_tail_cutoff(int p);

LaurentVector apply_H_circle(const LaurentVector& v);
/// f(z) -> u(z) f(conj z), u(z) = (sqrt p - z) / (sqrt p - conj z).
LaurentVector fourier_circle(const LaurentVector& v);
/// f(z) -> f(conj z)
LaurentVector inversion_circle(const LaurentVector& v);

struct SupportInterval {
  double lo = 0.0;
  double hi = 0.0;
  /// the image of the unit circle under z -> z / (sqrt p - z)
  double center = 0.0;
  double radius = 0.0;
};

SupportInterval spectrum_support(int p);

struct SpectrumReport {
  int p = 0;
  int N = 0;
  std::vector<double> eigenvalues;  // ascending
  double support_lo = 0.0;
  double support_hi = 0.0;
  /// largest distance of an eigenvalue outside [support_lo, support_hi]
  double max_outside = 0.0;
  double gap_lo = 0.0;  // min eigenvalue - support_lo
  double gap_hi = 0.0;  // support_hi - max eigenvalue
};

/// Dense Hermitian eigensolve of the (2N+1)-square truncation of H_{ij}.
SpectrumReport toeplitz_spectrum(int p, int N);

}  // namespace conductor_lab
