#include "conductor_lab/conductor.hpp"

#include <cstdlib>

namespace conductor_lab {

ExactScalar matrix_element_H(int p, int i, int j) {
  require_prime(p);
  const ExactHImage h = apply_H(make_theta(p, i));
  // eta_i = (1 - 1/p)^{-1/2} p^{-i/2} theta_i
  const ExactScalar raw = inner_product(h, make_theta(p, j));
  return raw * ExactScalar::sqrt_p_power(p, -(i + j)) * (1 / (1 - Rational(1, p)));
}

ExactScalar matrix_element_closed_form(int p, int i, int j) {
  if (i == j) return {};
  return ExactScalar::log_p(p, -1) * ExactScalar::sqrt_p_power(p, -std::abs(i - j));
}

}  // namespace conductor_lab
