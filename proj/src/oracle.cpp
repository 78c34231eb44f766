#include "pinnacle/oracle.hpp"

#include "pinnacle/counting.hpp"
#include "pinnacle/errors.hpp"
#include "pinnacle/generation.hpp"
#include "pinnacle/orderings.hpp"
#include "pinnacle/q_sum.hpp"

#include <algorithm>
#include <numeric>

namespace pinnacle {

namespace {

constexpr int kMaxBruteN = 10;

std::string set_string(const std::set<int>& s) {
    std::string out = "{";
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        if (it != s.rbegin())
            out += ',';
        out += std::to_string(*it);
    }
    return out + "}";
}

class Checker {
public:
    Checker(BruteForceReport& report, int n, const std::set<int>& pins) : report_(report), n_(n), pins_(pins) {}

    void equal(const std::string& check, const std::string& method_a, const ExactCount& a, const std::string& method_b,
               const ExactCount& b) {
        ++report_.comparisons;
        if (a != b)
            report_.mismatches.push_back({n_, pins_, check, method_a, to_decimal(a), method_b, to_decimal(b)});
    }

    // Runs a method that may throw; the exception text becomes the value.
    template <typename Fn>
    void equal_call(const std::string& check, const std::string& method_a, const ExactCount& a,
                    const std::string& method_b, Fn&& fn) {
        try {
            equal(check, method_a, a, method_b, fn());
        } catch (const std::exception& e) {
            ++report_.comparisons;
            report_.mismatches.push_back({n_, pins_, check, method_a, to_decimal(a), method_b,
                                          std::string("threw: ") + e.what()});
        }
    }

private:
    BruteForceReport& report_;
    int n_;
    std::set<int> pins_;
};

LevelReport scan_level(int n) {
    LevelReport level;
    level.n = n;
    for_each_permutation(n, [&](const Permutation& pi) {
        const auto pins = pinnacle_set(pi);
        level.counts_by_pinnacle_set[pins] += 1;
        level.orderings_by_pinnacle_set[pins].insert(pinnacle_ordering(pi));
        level.class_size_by_motzkin_type[motzkin_type(cyclic_completion(pi))] += 1;
        level.total += 1;
    });
    return level;
}

}  // namespace

std::string Mismatch::to_string() const {
    return "n=" + std::to_string(n) + " P=" + set_string(pinnacles) + " " + check + ": " + method_a + "=" + value_a +
           " " + method_b + "=" + value_b;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        visit(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

ExactCount brute_count(int n, const std::set<int>& pinnacles) {
    if (n > kMaxBruteN)
        throw LimitExceeded("brute force is limited to n <= " + std::to_string(kMaxBruteN));
    unsigned long count = 0;
    for_each_permutation(n, [&](const Permutation& pi) { count += pinnacle_set(pi) == pinnacles; });
    return count;
}

std::set<Permutation> brute_orderings(const std::set<int>& pinnacles) {
    if (pinnacles.empty())
        return {Permutation()};
    const int n = *pinnacles.rbegin();
    if (n > 9)
        throw LimitExceeded("brute-force orderings are limited to p_1 <= 9");
    std::set<Permutation> out;
    for_each_permutation(n, [&](const Permutation& pi) {
        if (pinnacle_set(pi) == pinnacles)
            out.insert(pinnacle_ordering(pi));
    });
    return out;
}

BruteForceReport cross_check(int max_n, const CrossCheckOptions& options) {
    if (max_n > kMaxBruteN)
        throw LimitExceeded("cross_check is limited to max_n <= " + std::to_string(kMaxBruteN));
    const auto recurrence = options.count_override
                                ? options.count_override
                                : std::function<ExactCount(const PinnacleProblem&)>(count_pinnacle);
    BruteForceReport report;
    for (int n = 1; n <= max_n; ++n) {
        LevelReport level = scan_level(n);

        Checker total_check(report, n, {});
        total_check.equal("total", "sum-over-P", level.total, "factorial", factorial(static_cast<unsigned long>(n)));

        ExactCount sum_over_sets = 0;
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            std::set<int> pins;
            for (int v = 1; v <= n; ++v)
                if (mask & (1UL << (v - 1)))
                    pins.insert(v);
            const auto prob = PinnacleProblem::from_set(n, pins);
            Checker check(report, n, pins);

            const auto found = level.counts_by_pinnacle_set.find(pins);
            const ExactCount brute = found == level.counts_by_pinnacle_set.end() ? ExactCount(0) : found->second;
            const ExactCount rec = recurrence(prob);
            sum_over_sets += rec;
            check.equal("count", "brute-force", brute, "recurrence", rec);
            check.equal_call("count", "brute-force", brute, "motzkin-sum", [&] { return count_via_motzkin_sum(prob); });
            check.equal_call("count", "brute-force", brute, "dyck-sum", [&] { return count_via_dyck_sum(prob); });
            check.equal("admissible", "brute-force-nonempty", brute != 0 ? 1 : 0, "criterion",
                        is_admissible_pinnacle_set(prob) ? 1 : 0);

            // q_n(P) from brute-force counts of every subset of P.
            ExactCount q_brute = 0;
            for (unsigned long sub = mask;; sub = (sub - 1) & mask) {
                std::set<int> q_pins;
                for (int v = 1; v <= n; ++v)
                    if (sub & (1UL << (v - 1)))
                        q_pins.insert(v);
                const auto it = level.counts_by_pinnacle_set.find(q_pins);
                if (it != level.counts_by_pinnacle_set.end())
                    q_brute += pow2(q_pins.size()) * it->second;
                if (sub == 0)
                    break;
            }
            check.equal_call("q", "brute-force", q_brute, "subset-definition", [&] { return q_subset_definition(prob); });
            check.equal_call("q", "brute-force", q_brute, "recurrence", [&] { return q_recurrence(prob); });
            check.equal_call("q", "brute-force", q_brute, "meander-enum",
                             [&] { return q_meander(prob, MeanderMode::Enumerate); });
            check.equal_call("q", "brute-force", q_brute, "meander-dp",
                             [&] { return q_meander(prob, MeanderMode::DynamicProgramming); });

            if (!pins.empty() && brute != 0) {
                const auto& seen = level.orderings_by_pinnacle_set.at(pins);
                const ExactCount brute_orders = static_cast<unsigned long>(seen.size());
                check.equal_call("orders", "brute-force", brute_orders, "recurrence", [&] { return order_count(prob); });
                check.equal_call("orders", "brute-force", brute_orders, "compatible-motzkin",
                                 [&] { return order_count_via_motzkin(prob); });
                check.equal_call("orders", "brute-force", brute_orders, "compatibility-filter", [&] {
                    const auto listed = list_admissible_orderings(prob);
                    const std::set<Permutation> as_set(listed.begin(), listed.end());
                    return as_set == seen ? ExactCount(static_cast<unsigned long>(listed.size())) : ExactCount(-1);
                });
            }
        }
        total_check.equal("total", "recurrence-sum-over-P", sum_over_sets, "factorial",
                          factorial(static_cast<unsigned long>(n)));

        // Each Motzkin path of length n-1 is the type of exactly w(M) cyclic
        // permutations of size n+1.
        auto paths = PathEnumerator::motzkin(n - 1);
        std::size_t seen_types = 0;
        while (auto m = paths.next()) {
            ++seen_types;
            const auto it = level.class_size_by_motzkin_type.find(*m);
            const ExactCount size = it == level.class_size_by_motzkin_type.end() ? ExactCount(0) : it->second;
            total_check.equal("motzkin-class " + m->to_string(), "brute-force", size, "motzkin-weight",
                              motzkin_weight(*m));
        }
        total_check.equal("motzkin-class-count", "brute-force",
                          static_cast<unsigned long>(level.class_size_by_motzkin_type.size()), "motzkin-paths",
                          static_cast<unsigned long>(seen_types));

        report.levels.push_back(std::move(level));
    }
    return report;
}

}  // namespace pinnacle
