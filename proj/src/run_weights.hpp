#pragma once

#include "pinnacle/exact_count.hpp"

#include <vector>

namespace pinnacle::detail {

/// x^g for 0 <= x <= max_base, with 0^0 = 1.
std::vector<ExactCount> power_table(long g, int max_base);

/// All run weights f(d, ell, g) for one gap length g and 0 <= d <= ell <= max_ell
/// (plus d = ell + 1, which is always 0 unless g is large enough).
///
/// S(ell, d) = sum_m (-1)^m C(d, m) (ell+1-m)^g is the d-th backward
/// difference of x^g at x = ell+1, so the whole table follows from
/// S(ell, d) = S(ell, d-1) - S(ell-1, d-1) with one subtraction per entry.
/// Dividing by d! is exact.
class RunWeights {
public:
    /// powers must hold x^g for 0 <= x <= max_ell + 1 (ignored when g < 0).
    RunWeights(long g, int max_ell, const std::vector<ExactCount>& powers, const std::vector<ExactCount>& factorials);

    const ExactCount& operator()(int d, int ell) const;

private:
    long g_;
    int max_ell_;
    // weights_[ell][d]
    std::vector<std::vector<ExactCount>> weights_;
    ExactCount zero_;
};

}  // namespace pinnacle::detail
