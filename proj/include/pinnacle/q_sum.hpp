#pragma once

#include "pinnacle/exact_count.hpp"
#include "pinnacle/problem.hpp"

#include <vector>

namespace pinnacle {

/// Heights r_0..r_k of a Dyck meander: r_0 = 0, r_i >= 0, |r_i - r_{i-1}| = 1.
class MeanderSequence {
public:
    /// std::invalid_argument if the invariants fail.
    explicit MeanderSequence(std::vector<int> heights);

    int length() const { return static_cast<int>(heights_.size()) - 1; }
    const std::vector<int>& heights() const { return heights_; }

private:
    std::vector<int> heights_;
};

/// prod_{m=0}^{k} (r_m + 1)^{p_m - p_{m+1}} with 0^0 = 1.
ExactCount meander_weight(const PinnacleProblem& prob, const MeanderSequence& r);

/// Every meander of length k, in lexicographic order of heights.
std::vector<MeanderSequence> all_meanders(int k);

/// q_n(P) = sum_{Q subset of P} 2^{|Q|} |S_n(Q)|, straight from the
/// definition. Guarded to k <= max_k.
ExactCount q_subset_definition(const PinnacleProblem& prob, int max_k = 20);

/// q_n(P) through the rescaled valley Motzkin prefix recurrence
///   A(0,0) = 1,
///   A(i+1,j) = 2^{i+1} [i+1 = j]
///            + sum_{i'<=i} sum_{j'<=j-i+i'} 2^{i-i'}
///                f(i'-j'-i+j, i'-j'+1, p_{i'+1} - p_{i+2} - 1) A(i',j'),
///   q_n(P) = 2^{n-1-k} A(k,k),
/// where A(i,j) = 2^i a(i,j) keeps everything integral.
ExactCount q_recurrence(const PinnacleProblem& prob);

enum class MeanderMode { Enumerate, DynamicProgramming };

/// q_n(P) = 2^{n-k-1} sum over meanders r of length k of w(r).
/// Enumerate mode is guarded to k <= max_k.
ExactCount q_meander(const PinnacleProblem& prob, MeanderMode mode = MeanderMode::DynamicProgramming,
                     int max_k = 20);

}  // namespace pinnacle
