#include "pinnacle/q_sum.hpp"

#include "pinnacle/counting.hpp"
#include "pinnacle/errors.hpp"
#include "run_weights.hpp"

#include <map>
#include <stdexcept>

namespace pinnacle {

namespace {

// Every Q containing 1 has |S_n(Q)| = 0, so q_n(P) = q_n(P \ {1}). The
// closed forms below assume 1 is not in P.
PinnacleProblem drop_one(const PinnacleProblem& prob) { return prob.without(1); }

ExactCount power(long base, long exponent) {
    ExactCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return r;
}

}  // namespace

MeanderSequence::MeanderSequence(std::vector<int> heights) : heights_(std::move(heights)) {
    if (heights_.empty() || heights_[0] != 0)
        throw std::invalid_argument("meander must start at height 0");
    for (std::size_t i = 1; i < heights_.size(); ++i)
        if (heights_[i] < 0 || std::abs(heights_[i] - heights_[i - 1]) != 1)
            throw std::invalid_argument("meander heights must move by +-1 and stay nonnegative");
}

ExactCount meander_weight(const PinnacleProblem& prob, const MeanderSequence& r) {
    if (r.length() != prob.k())
        throw std::invalid_argument("meander length must equal the number of pinnacles");
    ExactCount w = 1;
    for (int m = 0; m <= prob.k(); ++m) {
        const long exponent = prob.p(m) - prob.p(m + 1);
        w *= power(r.heights()[static_cast<std::size_t>(m)] + 1, exponent);
    }
    return w;
}

std::vector<MeanderSequence> all_meanders(int k) {
    std::vector<MeanderSequence> out;
    std::vector<int> r{0};
    // Depth-first, down before up, which is lexicographic in the heights.
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(r.size()) == k + 1) {
            out.emplace_back(r);
            return;
        }
        for (int delta : {-1, 1}) {
            const int h = r.back() + delta;
            if (h < 0)
                continue;
            r.push_back(h);
            self(self);
            r.pop_back();
        }
    };
    extend(extend);
    return out;
}

ExactCount q_subset_definition(const PinnacleProblem& prob, int max_k) {
    const int k = prob.k();
    if (k > max_k)
        throw LimitExceeded("subset-definition q is limited to k <= " + std::to_string(max_k));
    const auto pins = prob.pinnacles();
    ExactCount total = 0;
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < k; ++i)
            if (mask & (1UL << i))
                subset.push_back(pins[static_cast<std::size_t>(i)]);
        const auto size = subset.size();
        total += pow2(size) * count_pinnacle(PinnacleProblem(prob.n(), std::move(subset)));
    }
    return total;
}

ExactCount q_recurrence(const PinnacleProblem& original) {
    const auto prob = drop_one(original);
    const int n = prob.n();
    const int k = prob.k();
    if (k == 0)
        return pow2(static_cast<unsigned long>(n - 1));

    std::vector<ExactCount> factorials(static_cast<std::size_t>(k) + 3);
    factorials[0] = 1;
    for (int i = 1; i < static_cast<int>(factorials.size()); ++i)
        factorials[static_cast<std::size_t>(i)] = factorials[static_cast<std::size_t>(i - 1)] * i;
    std::map<long, std::vector<ExactCount>> powers;

    using Row = std::vector<ExactCount>;
    std::vector<Row> A(static_cast<std::size_t>(k) + 1, Row(static_cast<std::size_t>(k) + 1, 0));
    A[0][0] = 1;
    for (int i = 0; i < k; ++i) {
        Row& target = A[static_cast<std::size_t>(i + 1)];
        for (int ip = 0; ip <= i; ++ip) {
            const long g = prob.p(ip + 1) - prob.p(i + 2) - 1;
            auto it = powers.find(g);
            if (it == powers.end())
                it = powers.emplace(g, detail::power_table(g, k + 1)).first;
            const detail::RunWeights f(g, ip + 1, it->second, factorials);
            const ExactCount scale = pow2(static_cast<unsigned long>(i - ip));
            for (int j = 0; j <= i + 1; ++j) {
                const int jp_max = std::min(ip, j - i + ip);
                for (int jp = 0; jp <= jp_max; ++jp) {
                    const auto& a = A[static_cast<std::size_t>(ip)][static_cast<std::size_t>(jp)];
                    if (a == 0)
                        continue;
                    const auto& fv = f(ip - jp - i + j, ip - jp + 1);
                    if (fv == 0)
                        continue;
                    target[static_cast<std::size_t>(j)] += scale * fv * a;
                }
            }
        }
        target[static_cast<std::size_t>(i + 1)] += pow2(static_cast<unsigned long>(i + 1));
    }
    return scale_pow2(A[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)], static_cast<long>(n) - 1 - k);
}

ExactCount q_meander(const PinnacleProblem& original, MeanderMode mode, int max_k) {
    const auto prob = drop_one(original);
    const int k = prob.k();
    const long scale = static_cast<long>(prob.n()) - k - 1;
    if (mode == MeanderMode::Enumerate) {
        if (k > max_k)
            throw LimitExceeded("meander enumeration is limited to k <= " + std::to_string(max_k));
        ExactCount total = 0;
        for (const auto& r : all_meanders(k))
            total += meander_weight(prob, r);
        return scale_pow2(total, scale);
    }

    // weight[h]: total weight of meander prefixes r_0..r_m with r_m = h.
    std::vector<ExactCount> weight(static_cast<std::size_t>(k) + 2, 0);
    weight[0] = 1;  // (0 + 1)^{p_0 - p_1}
    for (int m = 1; m <= k; ++m) {
        std::vector<ExactCount> next(weight.size(), 0);
        const long exponent = prob.p(m) - prob.p(m + 1);
        for (int h = 0; h <= m; ++h) {
            auto& v = next[static_cast<std::size_t>(h)];
            if (h > 0)
                v += weight[static_cast<std::size_t>(h - 1)];
            v += weight[static_cast<std::size_t>(h + 1)];
            if (v != 0)
                v *= power(h + 1, exponent);
        }
        weight = std::move(next);
    }
    ExactCount total = 0;
    for (const auto& v : weight)
        total += v;
    return scale_pow2(total, scale);
}

}  // namespace pinnacle
