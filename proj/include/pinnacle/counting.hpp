#pragma once

#include "pinnacle/exact_count.hpp"
#include "pinnacle/lattice_path.hpp"
#include "pinnacle/problem.hpp"

#include <vector>

namespace pinnacle {

/// h_m(top, top-1, ..., top-count+1): the complete homogeneous symmetric
/// polynomial of degree m in `count` consecutive integers. Signed, so it can
/// be evaluated at nonpositive arguments. Requires m >= 0 and count >= 1.
ExactCount homogeneous_consecutive(int m, long top, int count);

/// Weight of a run of d Down steps that starts at height ell inside a gap of
/// g steps:
///   0                                          if d > g,
///   ([ell = 0] + ell(ell+1)) * h_{g-d}(ell+1, ell, ..., ell-d+1)  otherwise.
/// Requires d, ell, g >= 0 and d <= ell + 1; std::invalid_argument otherwise.
ExactCount f_weight(int d, int ell, long g);

std::vector<int> gap_sequence(const PinnacleProblem& prob);

/// |S_n(P)| through the valley Dyck prefix recurrence
///   c(0,0) = 1,
///   c(i+1,j) = sum_{j'<=j} f(j-j', i-j'+1, g_{i+1}) c(i,j'),
///   |S_n(P)| = 2^{n-1-2k} c(k,k).
/// Uses O(k^3) big-integer operations after caching x^g for every distinct
/// gap value g and 0 <= x <= k+1.
ExactCount count_pinnacle(const PinnacleProblem& prob);

/// Sum of motzkin_weight over the Motzkin paths of length n-1 whose Up steps
/// are forced by P. Guarded to n <= max_n.
ExactCount count_via_motzkin_sum(const PinnacleProblem& prob, int max_n = 30);

/// Reduced weight prod_{i=0}^{k} f(d_i, ell_i, g_i) of a Dyck path of length
/// 2k. The number of permutations of S_n(P) with this Dyck type is
/// 2^{n-1-2k} times this value. std::invalid_argument unless d is a Dyck path
/// with exactly k Up steps.
ExactCount dyck_weight(const PinnacleProblem& prob, const LatticePath& d);

/// 2^{n-1-2k} * sum over all Dyck paths with k Up steps of dyck_weight.
/// Guarded to k <= max_k.
ExactCount count_via_dyck_sum(const PinnacleProblem& prob, int max_k = 14);

}  // namespace pinnacle
