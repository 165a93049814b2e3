#pragma once

#include "thag/bischur.hpp"

namespace thag {

// Independent recomputation of the equivariant KL families by the
// orbit-sum-plus-palindromicity recursion, sharing nothing with the closed
// forms beyond ring arithmetic. These are the correctness oracles.

// P of T_n from the orbit descriptors: rest(t) = sum_{k>=1} t^k h_k[X+Y] P(n-k)
// + sum_{k>=0} t^(k+1) h_k[X] h_(n-k)[X]; the palindromicity of Z = P + rest
// at degree n+1 pins P_i = rest_(n+1-i) - rest_i for i < (n+1)/2. Throws a
// logic error if the reconstructed Z fails palindromicity (an implementation
// bug, not bad input). Guard 0 <= n <= max_n.
GradedBiSchur p_thagomizer_oracle(int n, int max_n = 10);

// Same extraction for the cycle matroid C_k under the symmetric group
// (Y-alphabet): rest(t) = t^(k-1) h_k + sum_{j=1}^{k-2} t^j h_j C(k-j);
// C_i = rest_(k-1-i) - rest_i for i < (k-1)/2. Guard 2 <= k <= max_k.
GradedBiSchur p_cycle_oracle(int k, int max_k = 14);

// Q of T_n by the signed triangular inversion
//   sum_k (-1)^k Q_k h_(n-k)[X] = sum_k (-1)^k e_k[X+Y] P_(n-k),
// with P supplied by p_thagomizer_oracle; the k = n term isolates Q_n.
// Guard 0 <= n <= max_n.
GradedBiSchur q_thagomizer_oracle(int n, int max_n = 10);

} // namespace thag
