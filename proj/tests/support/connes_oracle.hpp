#ifndef TRUNCIRC_TESTS_CONNES_ORACLE_HPP
#define TRUNCIRC_TESTS_CONNES_ORACLE_HPP

#include "truncirc/states.hpp"

namespace truncirc_tests {

// Independent brute-force evaluation of the truncated Connes distance for
// small n (intended for n <= 4): maximizes the scale-invariant ratio
//   objective(S) / ||S||
// over nonzero Hermitian Toeplitz S with zero main diagonal, where
// objective(S) = 2 Re sum_k conj(delta_k) s_k / k. The ratio is quasiconcave
// on the cone where the objective is positive, so multi-start compass search
// over the 2(n-1) real coordinates finds the global optimum.
double connes_oracle(const truncirc::MomentState& phi,
                     const truncirc::MomentState& psi,
                     std::uint64_t seed = 0, int starts = 48);

}  // namespace truncirc_tests

#endif
