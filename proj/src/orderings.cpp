#include "pinnacle/orderings.hpp"

#include "pinnacle/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pinnacle {

CeilingProfile::CeilingProfile(std::vector<int> heights) : heights_(std::move(heights)) {
    if (heights_.empty() || heights_[0] != 0)
        throw std::invalid_argument("ceiling profile must start with 0");
    for (std::size_t i = 1; i < heights_.size(); ++i)
        if (heights_[i] < 0 || heights_[i] > heights_[i - 1] + 1)
            throw std::invalid_argument("ceiling profile heights must satisfy 0 <= l_i <= l_{i-1} + 1");
}

LatticePath CeilingProfile::dyck_path() const {
    std::vector<Step> steps;
    for (int i = 1; i <= k(); ++i) {
        if (i > 1)
            steps.insert(steps.end(), static_cast<std::size_t>(at(i - 1) + 1 - at(i)), Step::Down);
        steps.push_back(Step::Up);
    }
    steps.insert(steps.end(), static_cast<std::size_t>(at(k()) + 1), Step::Down);
    return LatticePath(std::move(steps));
}

bool is_admissible_pinnacle_set(const PinnacleProblem& prob) {
    const int k = prob.k();
    for (int i = 1; i <= k; ++i)
        if (prob.p(i) < 3 + 2 * (k - i))
            return false;
    return true;
}

CeilingProfile maximal_dyck_type(const PinnacleProblem& prob) {
    if (prob.empty())
        throw std::domain_error("maximal_dyck_type needs a nonempty pinnacle set");
    if (!is_admissible_pinnacle_set(prob))
        throw std::domain_error("pinnacle set " + prob.pinnacles_string() + " is not admissible");
    const int k = prob.k();
    std::vector<int> ell{0};
    for (int i = 2; i <= k; ++i)
        ell.push_back(std::min(ell.back() + 1, prob.p(i) - 3 - 2 * (k - i)));
    return CeilingProfile(std::move(ell));
}

ExactCount order_count_under(const CeilingProfile& ceiling) {
    const int k = ceiling.k();
    // b[j] = b(i, j); one spare slot on each side keeps the stencil simple.
    std::vector<ExactCount> b(static_cast<std::size_t>(k) + 2, 0);
    b[0] = 1;
    for (int i = 0; i + 1 <= k - 1; ++i) {
        std::vector<ExactCount> next(b.size(), 0);
        const int reach = std::min(i + 1, k);
        for (int j = 0; j <= reach; ++j) {
            auto& v = next[static_cast<std::size_t>(j)];
            if (j > 0)
                v += b[static_cast<std::size_t>(j - 1)];
            v += 2 * (j + 1) * b[static_cast<std::size_t>(j)];
            if (j + 1 < static_cast<int>(b.size()))
                v += (j + 1) * (j + 2) * b[static_cast<std::size_t>(j + 1)];
        }
        // Prefixes of length i+1 <= k-2 must end under ell_{i+2}.
        if (i + 1 <= k - 2)
            for (int j = ceiling.at(i + 2) + 1; j < static_cast<int>(next.size()); ++j)
                next[static_cast<std::size_t>(j)] = 0;
        b = std::move(next);
    }
    return b[0];
}

namespace {

void require_orderable(const PinnacleProblem& prob) {
    if (prob.empty())
        throw std::domain_error("orderings need at least one pinnacle");
    if (!is_admissible_pinnacle_set(prob))
        throw std::domain_error("pinnacle set " + prob.pinnacles_string() + " is not admissible");
}

}  // namespace

ExactCount order_count(const PinnacleProblem& prob) {
    require_orderable(prob);
    return order_count_under(maximal_dyck_type(prob));
}

ExactCount order_count_via_motzkin(const PinnacleProblem& prob, int max_k) {
    require_orderable(prob);
    const int k = prob.k();
    if (k > max_k)
        throw LimitExceeded("compatible-Motzkin ordering count is limited to k <= " + std::to_string(max_k));
    const auto ceiling = maximal_dyck_type(prob).dyck_path();
    auto paths = PathEnumerator::motzkin(k - 1);
    ExactCount total = 0;
    while (auto m = paths.next())
        if (is_compatible(*m, ceiling, k))
            total += motzkin_weight(*m);
    return total;
}

bool is_admissible_ordering(const Permutation& sigma, const PinnacleProblem& prob) {
    if (sigma.size() != prob.k())
        throw std::invalid_argument("ordering of size " + std::to_string(sigma.size()) + " for " +
                                    std::to_string(prob.k()) + " pinnacles");
    require_orderable(prob);
    const auto m = motzkin_type(cyclic_completion(complement(sigma)));
    return is_compatible(m, maximal_dyck_type(prob).dyck_path(), prob.k());
}

bool is_maximally_admissible(const PinnacleProblem& prob) {
    const int k = prob.k();
    for (int i = 2; i <= k - 1; ++i)
        if (prob.p(i) < std::min(2 * k - i + 2, 3 * (k + 1 - i)))
            return false;
    return true;
}

std::vector<CeilingProfile> all_ceiling_profiles(int k) {
    std::vector<CeilingProfile> out;
    if (k < 1)
        return out;
    std::vector<int> ell(static_cast<std::size_t>(k), 0);
    // Odometer over ell_2..ell_k, last position fastest.
    while (true) {
        out.emplace_back(ell);
        int i = k - 1;
        while (i >= 1 && ell[static_cast<std::size_t>(i)] == ell[static_cast<std::size_t>(i - 1)] + 1)
            --i;
        if (i < 1)
            break;
        ++ell[static_cast<std::size_t>(i)];
        std::fill(ell.begin() + i + 1, ell.end(), 0);
    }
    return out;
}

ExactCount alpha(int k, AlphaMode mode) {
    if (k < 1)
        throw std::invalid_argument("alpha needs k >= 1");
    std::set<ExactCount> values;
    if (mode == AlphaMode::Ceiling) {
        for (const auto& ceiling : all_ceiling_profiles(k))
            values.insert(order_count_under(ceiling));
    } else {
        const int n = 2 * k + 1;
        // Lexicographic k-subsets of [n] via a selection mask.
        std::vector<char> pick(static_cast<std::size_t>(n), 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        do {
            std::vector<int> chosen;
            for (int v = n; v >= 1; --v)
                if (pick[static_cast<std::size_t>(v - 1)])
                    chosen.push_back(v);
            const PinnacleProblem prob(n, std::move(chosen));
            if (is_admissible_pinnacle_set(prob))
                values.insert(order_count(prob));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return static_cast<unsigned long>(values.size());
}

}  // namespace pinnacle
