#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

namespace pinnacle {

/// An ambient size n together with a candidate pinnacle set
/// P = {p_1 > p_2 > ... > p_k} subset of [n]. P need not be admissible.
class PinnacleProblem {
public:
    /// Throws std::invalid_argument unless n >= 1 and the list is strictly
    /// decreasing inside [1, n].
    PinnacleProblem(int n, std::vector<int> decreasing_pinnacles);

    /// Accepts the values in any order; rejects duplicates and values outside
    /// [1, n].
    static PinnacleProblem from_values(int n, std::span<const int> values);
    static PinnacleProblem from_set(int n, const std::set<int>& values);

    int n() const { return n_; }
    int k() const { return static_cast<int>(pinnacles_.size()); }
    bool empty() const { return pinnacles_.empty(); }

    /// p_i for 0 <= i <= k+1, with p_0 = n+1 and p_{k+1} = 1.
    int p(int i) const;
    std::span<const int> pinnacles() const { return pinnacles_; }
    std::set<int> as_set() const { return {pinnacles_.begin(), pinnacles_.end()}; }

    /// (g_0, ..., g_k) with g_i = p_i - p_{i+1} - 1. g_k is -1 when 1 is in P.
    std::vector<int> gaps() const;

    /// Same n, P with the value dropped (no-op if absent).
    PinnacleProblem without(int value) const;
    PinnacleProblem with(int value) const;

    /// "{7,5,3}".
    std::string pinnacles_string() const;

    bool operator==(const PinnacleProblem&) const = default;

private:
    int n_;
    std::vector<int> pinnacles_;
};

}  // namespace pinnacle
