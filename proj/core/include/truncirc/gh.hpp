#ifndef TRUNCIRC_GH_HPP
#define TRUNCIRC_GH_HPP

#include <Eigen/Dense>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace truncirc {

/// Finite metric space: labelled points and a symmetric distance matrix.
struct FinitePointCloud {
  std::vector<std::string> labels;
  Eigen::MatrixXd dist;

  int size() const { return int(dist.rows()); }
  /// Checks symmetry, zero diagonal, and the triangle inequality (tol 1e-9).
  void validate() const;
};

/// Relation between two point clouds; must cover both index sets.
struct Correspondence {
  std::vector<std::pair<int, int>> pairs;
};

/// Hausdorff distance between two index subsets of one ambient cloud.
double hausdorff_distance(std::span<const int> a, std::span<const int> b,
                          const FinitePointCloud& ambient);

/// Max of |d_X(x,x') - d_Y(y,y')| over pairs of related pairs. Half of this
/// value is an upper bound on the Gromov-Hausdorff distance.
double distortion_correspondence(const Correspondence& r,
                                 const FinitePointCloud& x,
                                 const FinitePointCloud& y);

/// Max of |d_Y(f(x1), f(x2)) - d_X(x1, x2)| over index pairs.
double distortion_map(std::span<const int> f, const FinitePointCloud& x,
                      const FinitePointCloud& y);

/// Max over points of the distance to the subset; S is an eps-net iff the
/// value is <= eps.
double covering_radius(std::span<const int> s, const FinitePointCloud& x);

/// dis f <= eps and f(X) is an eps-net in Y.
bool is_epsilon_isometry(std::span<const int> f, const FinitePointCloud& x,
                         const FinitePointCloud& y, double eps);

}  // namespace truncirc

#endif
