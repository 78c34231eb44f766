#include "run_weights.hpp"

#include <stdexcept>

namespace pinnacle::detail {

std::vector<ExactCount> power_table(long g, int max_base) {
    std::vector<ExactCount> powers(static_cast<std::size_t>(max_base) + 1);
    if (g < 0)
        return powers;
    for (int x = 0; x <= max_base; ++x)
        mpz_ui_pow_ui(powers[static_cast<std::size_t>(x)].get_mpz_t(), static_cast<unsigned long>(x),
                      static_cast<unsigned long>(g));
    return powers;
}

RunWeights::RunWeights(long g, int max_ell, const std::vector<ExactCount>& powers,
                       const std::vector<ExactCount>& factorials)
    : g_(g), max_ell_(max_ell), zero_(0) {
    if (g_ < 0)
        return;
    const int top = max_ell + 1;
    if (static_cast<int>(powers.size()) <= top || static_cast<int>(factorials.size()) <= top)
        throw std::logic_error("RunWeights: power or factorial table too short");

    // diff[x][d] = d-th backward difference of t^g at t = x.
    std::vector<std::vector<ExactCount>> diff(static_cast<std::size_t>(top) + 1);
    for (int x = 0; x <= top; ++x) {
        auto& row = diff[static_cast<std::size_t>(x)];
        row.resize(static_cast<std::size_t>(x) + 1);
        row[0] = powers[static_cast<std::size_t>(x)];
        for (int d = 1; d <= x; ++d)
            row[static_cast<std::size_t>(d)] =
                row[static_cast<std::size_t>(d - 1)] - diff[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(d - 1)];
    }

    weights_.resize(static_cast<std::size_t>(max_ell) + 1);
    for (int ell = 0; ell <= max_ell; ++ell) {
        auto& row = weights_[static_cast<std::size_t>(ell)];
        row.resize(static_cast<std::size_t>(ell) + 2);
        const long mult = ell == 0 ? 1 : static_cast<long>(ell) * (ell + 1);
        for (int d = 0; d <= ell + 1; ++d) {
            if (d > g_)
                break;
            auto& w = row[static_cast<std::size_t>(d)];
            w = exact_divide(diff[static_cast<std::size_t>(ell + 1)][static_cast<std::size_t>(d)],
                             factorials[static_cast<std::size_t>(d)]);
            w *= mult;
        }
    }
}

const ExactCount& RunWeights::operator()(int d, int ell) const {
    if (g_ < 0 || d > g_)
        return zero_;
    if (ell < 0 || ell > max_ell_ || d < 0 || d > ell + 1)
        throw std::out_of_range("RunWeights: (d, ell) outside the table");
    return weights_[static_cast<std::size_t>(ell)][static_cast<std::size_t>(d)];
}

}  // namespace pinnacle::detail
