#pragma once

#include "pinnacle/exact_count.hpp"
#include "pinnacle/lattice_path.hpp"
#include "pinnacle/permutation.hpp"
#include "pinnacle/problem.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pinnacle {

/// Calls visit on every permutation of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

/// |{pi in S_n : Pin(pi) = P}| by exhaustive scan. n <= 10.
ExactCount brute_count(int n, const std::set<int>& pinnacles);

/// {ord(pi) : pi in S_{p_1}(P)}. p_1 <= 9; {empty permutation} for empty P.
std::set<Permutation> brute_orderings(const std::set<int>& pinnacles);

struct Mismatch {
    int n;
    std::set<int> pinnacles;
    std::string check;
    std::string method_a;
    std::string value_a;
    std::string method_b;
    std::string value_b;

    /// One line carrying everything needed to reproduce the failure.
    std::string to_string() const;
};

struct LevelReport {
    int n = 0;
    std::map<std::set<int>, ExactCount> counts_by_pinnacle_set;
    std::map<std::set<int>, std::set<Permutation>> orderings_by_pinnacle_set;
    std::map<LatticePath, ExactCount> class_size_by_motzkin_type;
    ExactCount total;
};

struct BruteForceReport {
    std::vector<LevelReport> levels;
    std::vector<Mismatch> mismatches;
    long comparisons = 0;

    bool ok() const { return mismatches.empty(); }
};

struct CrossCheckOptions {
    /// Replaces count_pinnacle everywhere it is compared; lets the harness be
    /// tested against a deliberately wrong implementation.
    std::function<ExactCount(const PinnacleProblem&)> count_override;
};

/// For every n <= max_n and every P subset of [n], compares the brute-force
/// count with the recurrence, Motzkin-sum and Dyck-sum counts; the four q
/// evaluators; ordering counts (recurrence, compatible Motzkin sum,
/// compatibility filter, brute force) whenever p_1 = n; Motzkin-type class
/// sizes against motzkin_weight; and the n! total. max_n <= 10.
BruteForceReport cross_check(int max_n, const CrossCheckOptions& options = {});

}  // namespace pinnacle
