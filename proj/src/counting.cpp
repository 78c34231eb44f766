#include "pinnacle/counting.hpp"

#include "pinnacle/errors.hpp"
#include "run_weights.hpp"

#include <map>
#include <stdexcept>

namespace pinnacle {

ExactCount homogeneous_consecutive(int m, long top, int count) {
    if (m < 0 || count < 1)
        throw std::invalid_argument("homogeneous_consecutive: need m >= 0 and count >= 1");
    // h[t] = h_t(x_1..x_c), extended one variable at a time:
    // h_t(x_1..x_c) = h_t(x_1..x_{c-1}) + x_c h_{t-1}(x_1..x_c).
    std::vector<ExactCount> h(static_cast<std::size_t>(m) + 1, 0);
    h[0] = 1;
    for (int c = 0; c < count; ++c) {
        const ExactCount x = top - c;
        for (int t = 1; t <= m; ++t)
            h[static_cast<std::size_t>(t)] += x * h[static_cast<std::size_t>(t - 1)];
    }
    return h[static_cast<std::size_t>(m)];
}

ExactCount f_weight(int d, int ell, long g) {
    if (d < 0 || ell < 0 || g < 0)
        throw std::invalid_argument("f_weight: arguments must be nonnegative");
    if (d > ell + 1)
        throw std::invalid_argument("f_weight: d must not exceed ell + 1");
    if (d > g)
        return 0;
    ExactCount alternating = 0;
    for (int m = 0; m <= d; ++m) {
        ExactCount term;
        mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(m));
        ExactCount power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(ell + 1 - m), static_cast<unsigned long>(g));
        term *= power;
        if (m % 2 == 0)
            alternating += term;
        else
            alternating -= term;
    }
    ExactCount w = exact_divide(alternating, factorial(static_cast<unsigned long>(d)));
    return w * (ell == 0 ? 1L : static_cast<long>(ell) * (ell + 1));
}

std::vector<int> gap_sequence(const PinnacleProblem& prob) { return prob.gaps(); }

ExactCount count_pinnacle(const PinnacleProblem& prob) {
    const int n = prob.n();
    const int k = prob.k();
    if (k == 0)
        return pow2(static_cast<unsigned long>(n - 1));

    const auto gaps = prob.gaps();
    std::vector<ExactCount> factorials(static_cast<std::size_t>(k) + 2);
    factorials[0] = 1;
    for (int i = 1; i <= k + 1; ++i)
        factorials[static_cast<std::size_t>(i)] = factorials[static_cast<std::size_t>(i - 1)] * i;

    // Bases never exceed k+1; at most k+1 distinct exponents occur.
    std::map<long, std::vector<ExactCount>> powers;
    for (int i = 1; i <= k; ++i) {
        const long g = gaps[static_cast<std::size_t>(i)];
        if (!powers.contains(g))
            powers.emplace(g, detail::power_table(g, k + 1));
    }

    // c[j] = c(i, j) for the current number i of Up steps.
    std::vector<ExactCount> c{1};
    for (int i = 0; i < k; ++i) {
        const long g = gaps[static_cast<std::size_t>(i + 1)];
        const detail::RunWeights f(g, i + 1, powers.at(g), factorials);
        std::vector<ExactCount> next(static_cast<std::size_t>(i) + 2, 0);
        for (int j = 0; j <= i + 1; ++j) {
            auto& acc = next[static_cast<std::size_t>(j)];
            for (int jp = 0; jp <= std::min(j, i); ++jp) {
                const auto& cv = c[static_cast<std::size_t>(jp)];
                if (cv == 0)
                    continue;
                const auto& fv = f(j - jp, i - jp + 1);
                if (fv == 0)
                    continue;
                mpz_addmul(acc.get_mpz_t(), fv.get_mpz_t(), cv.get_mpz_t());
            }
        }
        c = std::move(next);
    }
    return scale_pow2(c[static_cast<std::size_t>(k)], static_cast<long>(n) - 1 - 2L * k);
}

ExactCount count_via_motzkin_sum(const PinnacleProblem& prob, int max_n) {
    const int n = prob.n();
    if (n > max_n)
        throw LimitExceeded("motzkin-sum count is limited to n <= " + std::to_string(max_n));
    std::set<int> ups;
    for (int p : prob.pinnacles()) {
        // 1 would need an Up step at position n of a path of length n-1.
        if (p == 1)
            return 0;
        ups.insert(n + 1 - p);
    }
    auto paths = PathEnumerator::motzkin_with_ups(n - 1, ups);
    ExactCount total = 0;
    while (auto m = paths.next())
        total += motzkin_weight(*m);
    return total;
}

ExactCount dyck_weight(const PinnacleProblem& prob, const LatticePath& d) {
    const int k = prob.k();
    if (!d.is_dyck() || d.count(Step::Up) != k)
        throw std::invalid_argument("dyck_weight: " + d.to_string() + " is not a Dyck path with " +
                                    std::to_string(k) + " Up steps");
    const auto gaps = prob.gaps();
    // downs[i] and ends[i]: Down steps after, and height after, the i-th Up step.
    std::vector<int> downs(static_cast<std::size_t>(k) + 1, 0);
    std::vector<int> ends(static_cast<std::size_t>(k) + 1, 0);
    int up = 0;
    int h = 0;
    for (Step s : d.steps()) {
        h += height_change(s);
        if (s == Step::Up)
            ends[static_cast<std::size_t>(++up)] = h;
        else
            ++downs[static_cast<std::size_t>(up)];
    }
    ExactCount w = 1;
    for (int i = 0; i <= k; ++i) {
        const long g = gaps[static_cast<std::size_t>(i)];
        if (g < 0)
            return 0;
        w *= f_weight(downs[static_cast<std::size_t>(i)], ends[static_cast<std::size_t>(i)], g);
        if (w == 0)
            return 0;
    }
    return w;
}

ExactCount count_via_dyck_sum(const PinnacleProblem& prob, int max_k) {
    const int k = prob.k();
    if (k > max_k)
        throw LimitExceeded("dyck-sum count is limited to k <= " + std::to_string(max_k));
    auto paths = PathEnumerator::dyck(k);
    ExactCount total = 0;
    while (auto d = paths.next())
        total += dyck_weight(prob, *d);
    return scale_pow2(total, static_cast<long>(prob.n()) - 1 - 2L * k);
}

}  // namespace pinnacle
