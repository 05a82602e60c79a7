#ifndef TRUNCIRC_TRANSPORT_SIMPLEX_HPP
#define TRUNCIRC_TRANSPORT_SIMPLEX_HPP

#include <Eigen/Dense>
#include <vector>

namespace truncirc {

/// Exact optimal cost of the balanced transportation problem
/// min sum_ij cost(i,j) x_ij, sum_j x_ij = supply_i, sum_i x_ij = demand_j,
/// x >= 0, solved by a tree-based network simplex. Supplies and demands must
/// be nonnegative with (nearly) equal totals.
double solve_transportation(const std::vector<double>& supply,
                            const std::vector<double>& demand,
                            const Eigen::MatrixXd& cost);

}  // namespace truncirc

#endif
