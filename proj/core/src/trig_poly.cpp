#include "truncirc/trig_poly.hpp"

#include <cmath>
#include <numbers>

#include "truncirc/errors.hpp"

namespace truncirc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TrigPoly TrigPoly::constant(double value) {
  TrigPoly p(0);
  p.set_coeff(0, value);
  return p;
}

TrigPoly TrigPoly::basis(int k) {
  TrigPoly p(std::abs(k));
  p.set_coeff(k, 1.0);
  return p;
}

void TrigPoly::set_coeff(int k, Complex value) {
  if (k < -degree_ || k > degree_)
    throw DomainError("TrigPoly::set_coeff: index outside [-K, K]");
  coeffs_[static_cast<size_t>(k + degree_)] = value;
}

TrigPoly::Complex TrigPoly::eval(double t) const {
  // Horner in z = e^{it}: sum c_k z^k = z^{-K} (c_{-K} + z (c_{-K+1} + ...)).
  const Complex z = std::polar(1.0, t);
  Complex acc(0.0);
  for (int k = degree_; k >= -degree_; --k) acc = acc * z + coeff(k);
  return acc * std::polar(1.0, -degree_ * t);
}

double TrigPoly::eval_real(double t) const {
  const Complex v = eval(t);
  return v.real();
}

bool TrigPoly::is_real(double tol) const {
  for (int k = 0; k <= degree_; ++k) {
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
  }
  return true;
}

double TrigPoly::min_on_grid(int points) const {
  double m = eval_real(0.0);
  for (int i = 1; i < points; ++i)
    m = std::min(m, eval_real(kTwoPi * i / points));
  return m;
}

double TrigPoly::argmax_on_grid(int points) const {
  double best_t = 0.0, best_v = eval_real(0.0);
  for (int i = 1; i < points; ++i) {
    const double t = kTwoPi * i / points;
    const double v = eval_real(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  return best_t;
}

TrigPoly TrigPoly::operator*(const TrigPoly& other) const {
  TrigPoly out(degree_ + other.degree_);
  for (int j = -degree_; j <= degree_; ++j) {
    const Complex cj = coeff(j);
    if (cj == Complex(0.0)) continue;
    for (int k = -other.degree(); k <= other.degree(); ++k)
      out.set_coeff(j + k, out.coeff(j + k) + cj * other.coeff(k));
  }
  return out;
}

TrigPoly TrigPoly::normalized_density() const {
  const Complex c0 = coeff(0);
  if (std::abs(c0) == 0.0)
    throw DomainError("TrigPoly::normalized_density: zero mean coefficient");
  TrigPoly out(degree_);
  for (int k = -degree_; k <= degree_; ++k) out.set_coeff(k, coeff(k) / c0);
  return out;
}

TrigPoly TrigPoly::rotated(double alpha) const {
  TrigPoly out(degree_);
  for (int k = -degree_; k <= degree_; ++k)
    out.set_coeff(k, coeff(k) * std::polar(1.0, -k * alpha));
  return out;
}

TrigPoly root_form_density(std::span<const double> angles) {
  TrigPoly p = TrigPoly::constant(1.0);
  for (double theta : angles) {
    // 1 - cos(t - theta) has coefficients {0: 1, 1: -e^{-i theta}/2,
    // -1: -e^{i theta}/2}.
    TrigPoly factor(1);
    factor.set_coeff(0, 1.0);
    factor.set_coeff(1, -0.5 * std::polar(1.0, -theta));
    factor.set_coeff(-1, -0.5 * std::polar(1.0, theta));
    p = p * factor;
  }
  return p.normalized_density();
}

TrigPoly fejer_density(int n, double theta) {
  if (n < 1) throw DomainError("fejer_density: n must be >= 1");
  TrigPoly p(n - 1);
  for (int k = -(n - 1); k <= n - 1; ++k)
    p.set_coeff(k, (1.0 - std::abs(k) / double(n)) * std::polar(1.0, -k * theta));
  return p;
}

TrigPoly power_kernel(int m, int n, double rotation) {
  if (m < 1 || n < 1) throw DomainError("power_kernel: m, n must be >= 1");
  TrigPoly base(m);
  base.set_coeff(0, 1.0);
  base.set_coeff(m, -0.5 * std::polar(1.0, -m * rotation));
  base.set_coeff(-m, -0.5 * std::polar(1.0, m * rotation));
  TrigPoly p = base;
  for (int i = 1; i < n; ++i) p = p * base;
  return p.normalized_density();
}

}  // namespace truncirc
