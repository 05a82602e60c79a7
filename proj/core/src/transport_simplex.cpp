#include "truncirc/transport_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "truncirc/errors.hpp"

namespace truncirc {

namespace {

struct Arc {
  int i;  // supply node
  int j;  // demand node
  double flow;
};

}  // namespace

double solve_transportation(const std::vector<double>& supply,
                            const std::vector<double>& demand,
                            const Eigen::MatrixXd& cost) {
  const int m = int(supply.size());
  const int k = int(demand.size());
  if (m == 0 || k == 0)
    throw DomainError("solve_transportation: empty supply or demand");
  if (cost.rows() != m || cost.cols() != k)
    throw DomainError("solve_transportation: cost matrix shape mismatch");

  std::vector<double> a(supply), b(demand);
  double sa = 0.0, sb = 0.0;
  for (double v : a) {
    if (v < 0) throw DomainError("solve_transportation: negative supply");
    sa += v;
  }
  for (double v : b) {
    if (v < 0) throw DomainError("solve_transportation: negative demand");
    sb += v;
  }
  if (sa <= 0 || sb <= 0)
    throw DomainError("solve_transportation: zero total mass");
  if (std::abs(sa - sb) > 1e-6 * std::max(sa, sb))
    throw DomainError("solve_transportation: unbalanced problem");
  // Rebalance roundoff and perturb against degeneracy.
  const double eps = 1e-11 * sa / m;
  for (int i = 0; i < m; ++i) a[size_t(i)] += eps * (i + 1);
  double pert = eps * m * (m + 1) / 2.0;
  b[size_t(k - 1)] += (sa - sb) + pert;

  // Northwest-corner initial basis: exactly m + k - 1 arcs forming a tree.
  std::vector<Arc> basis;
  basis.reserve(size_t(m + k - 1));
  {
    int i = 0, j = 0;
    double ra = a[0], rb = b[0];
    while (true) {
      const double f = std::min(ra, rb);
      basis.push_back({i, j, f});
      ra -= f;
      rb -= f;
      if (i == m - 1 && j == k - 1) break;
      if (ra <= rb && i < m - 1) {
        ++i;
        ra = a[size_t(i)];
      } else {
        ++j;
        rb = b[size_t(j)];
      }
    }
  }

  const int nodes = m + k;  // supply nodes 0..m-1, demand nodes m..m+k-1
  std::vector<double> potential(static_cast<size_t>(nodes));
  std::vector<int> parent(static_cast<size_t>(nodes));
  std::vector<int> parent_arc(static_cast<size_t>(nodes));
  std::vector<std::vector<int>> adj(static_cast<size_t>(nodes));

  auto rebuild_adjacency = [&] {
    for (auto& l : adj) l.clear();
    for (int t = 0; t < int(basis.size()); ++t) {
      adj[size_t(basis[size_t(t)].i)].push_back(t);
      adj[size_t(m + basis[size_t(t)].j)].push_back(t);
    }
  };

  // Potentials: u_i + v_j = c_ij on basic arcs, anchored at u_0 = 0.
  auto compute_potentials = [&] {
    std::vector<char> seen(size_t(nodes), 0);
    std::deque<int> queue{0};
    potential[0] = 0.0;
    seen[0] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int t : adj[size_t(v)]) {
        const Arc& arc = basis[size_t(t)];
        const int other = (v < m) ? m + arc.j : arc.i;
        if (seen[size_t(other)]) continue;
        potential[size_t(other)] = cost(arc.i, arc.j) - potential[size_t(v)];
        seen[size_t(other)] = 1;
        queue.push_back(other);
      }
    }
  };

  // Tree path between two nodes via BFS parent pointers.
  auto find_path = [&](int from, int to) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[size_t(from)] = from;
    std::deque<int> queue{from};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (v == to) break;
      for (int t : adj[size_t(v)]) {
        const Arc& arc = basis[size_t(t)];
        const int other = (v < m) ? m + arc.j : arc.i;
        if (parent[size_t(other)] != -1) continue;
        parent[size_t(other)] = v;
        parent_arc[size_t(other)] = t;
        queue.push_back(other);
      }
    }
    std::vector<int> arcs;  // arc ids along to -> from
    int v = to;
    while (v != from) {
      arcs.push_back(parent_arc[size_t(v)]);
      v = parent[size_t(v)];
    }
    return arcs;
  };

  const int max_pivots = 40 * (m + k) + 4 * m * k;
  for (int pivot = 0; pivot < max_pivots; ++pivot) {
    rebuild_adjacency();
    compute_potentials();

    // Entering arc: most negative reduced cost.
    int best_i = -1, best_j = -1;
    double best_r = -1e-11;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < k; ++j) {
        const double r = cost(i, j) - potential[size_t(i)] - potential[size_t(m + j)];
        if (r < best_r) {
          best_r = r;
          best_i = i;
          best_j = j;
        }
      }
    if (best_i < 0) break;  // optimal

    // Cycle: entering arc (best_i, best_j) plus tree path demand -> supply.
    // Entering arc takes +theta; alternate signs along the path starting
    // from node best_j's side.
    auto path = find_path(m + best_j, best_i);
    double theta = std::numeric_limits<double>::infinity();
    int leave = -1;
    // Walk from best_i back towards best_j assigning alternating signs:
    // the arc adjacent to best_i on the path is a "minus" arc.
    int sign = -1;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (sign < 0 && basis[size_t(*it)].flow < theta) {
        theta = basis[size_t(*it)].flow;
        leave = *it;
      }
      sign = -sign;
    }
    if (leave < 0)
      throw NumericError("solve_transportation: no leaving arc found");
    sign = -1;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      basis[size_t(*it)].flow += sign * theta;
      sign = -sign;
    }
    basis[size_t(leave)] = {best_i, best_j, theta};
  }

  double total = 0.0;
  for (const Arc& arc : basis) total += arc.flow * cost(arc.i, arc.j);
  return total;
}

}  // namespace truncirc
