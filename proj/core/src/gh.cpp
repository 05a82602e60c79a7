#include "truncirc/gh.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "truncirc/errors.hpp"

namespace truncirc {

void FinitePointCloud::validate() const {
  const int n = size();
  if (dist.cols() != n) throw DomainError("FinitePointCloud: non-square matrix");
  if (!labels.empty() && int(labels.size()) != n)
    throw DomainError("FinitePointCloud: label count mismatch");
  for (int i = 0; i < n; ++i) {
    if (dist(i, i) != 0.0)
      throw DomainError("FinitePointCloud: nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      if (dist(i, j) < 0) throw DomainError("FinitePointCloud: negative distance");
      if (dist(i, j) != dist(j, i))
        throw DomainError("FinitePointCloud: asymmetric matrix");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (dist(i, j) > dist(i, k) + dist(k, j) + 1e-9)
          throw DomainError("FinitePointCloud: triangle inequality violated");
}

double hausdorff_distance(std::span<const int> a, std::span<const int> b,
                          const FinitePointCloud& ambient) {
  if (a.empty() || b.empty())
    throw DomainError("hausdorff_distance: empty index set");
  auto directed = [&](std::span<const int> from, std::span<const int> to) {
    double sup = 0.0;
    for (int x : from) {
      double inf = std::numeric_limits<double>::infinity();
      for (int y : to) inf = std::min(inf, ambient.dist(x, y));
      sup = std::max(sup, inf);
    }
    return sup;
  };
  return std::max(directed(a, b), directed(b, a));
}

double distortion_correspondence(const Correspondence& r,
                                 const FinitePointCloud& x,
                                 const FinitePointCloud& y) {
  std::vector<char> covered_x(size_t(x.size()), 0), covered_y(size_t(y.size()), 0);
  for (const auto& [i, j] : r.pairs) {
    if (i < 0 || i >= x.size() || j < 0 || j >= y.size())
      throw DomainError("distortion_correspondence: index out of range");
    covered_x[size_t(i)] = 1;
    covered_y[size_t(j)] = 1;
  }
  if (std::find(covered_x.begin(), covered_x.end(), 0) != covered_x.end() ||
      std::find(covered_y.begin(), covered_y.end(), 0) != covered_y.end())
    throw DomainError("distortion_correspondence: correspondence not total onto");

  double dis = 0.0;
  for (const auto& [i1, j1] : r.pairs)
    for (const auto& [i2, j2] : r.pairs)
      dis = std::max(dis, std::abs(x.dist(i1, i2) - y.dist(j1, j2)));
  return dis;
}

double distortion_map(std::span<const int> f, const FinitePointCloud& x,
                      const FinitePointCloud& y) {
  if (int(f.size()) != x.size())
    throw DomainError("distortion_map: map must be total on X");
  double dis = 0.0;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      dis = std::max(dis, std::abs(y.dist(f[size_t(i)], f[size_t(j)]) - x.dist(i, j)));
  return dis;
}

double covering_radius(std::span<const int> s, const FinitePointCloud& x) {
  if (s.empty()) throw DomainError("covering_radius: empty subset");
  double sup = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    double inf = std::numeric_limits<double>::infinity();
    for (int j : s) inf = std::min(inf, x.dist(i, j));
    sup = std::max(sup, inf);
  }
  return sup;
}

bool is_epsilon_isometry(std::span<const int> f, const FinitePointCloud& x,
                         const FinitePointCloud& y, double eps) {
  if (distortion_map(f, x, y) > eps) return false;
  std::vector<int> image(f.begin(), f.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return covering_radius(image, y) <= eps;
}

}  // namespace truncirc
