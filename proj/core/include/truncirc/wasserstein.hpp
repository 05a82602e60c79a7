#ifndef TRUNCIRC_WASSERSTEIN_HPP
#define TRUNCIRC_WASSERSTEIN_HPP

#include "truncirc/states.hpp"

namespace truncirc {

/// Cumulative mass of mu on [0, t), atoms entering as exact jumps and the
/// density part integrated in closed form.
double circle_cdf(const CircleMeasure& mu, double t);

struct W1Result {
  double value;
  /// The optimal CDF shift c* (weighted median of F_mu - F_nu); the dual
  /// certificate f'(t) = -sign(F_mu(t) - F_nu(t) - shift) is 1-Lipschitz.
  double shift;
};

/// Wasserstein-1 distance for the geodesic arc metric on the circle of
/// circumference 2*pi, via min_c int |F_mu - F_nu - c| dt. Exact for purely
/// atomic measures; density contributions are resolved at grid resolution.
W1Result w1_circle_detail(const CircleMeasure& mu, const CircleMeasure& nu,
                          int grid = 4096);
double w1_circle(const CircleMeasure& mu, const CircleMeasure& nu,
                 int grid = 4096);

/// Independent verification route: discretizes both measures to `grid` atoms
/// and solves the resulting transportation problem exactly with a network
/// simplex on the dense arc-distance cost matrix.
double w1_lp_oracle(const CircleMeasure& mu, const CircleMeasure& nu,
                    int grid = 256);

}  // namespace truncirc

#endif
