#include "pinnacle/problem.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pinnacle {

PinnacleProblem::PinnacleProblem(int n, std::vector<int> decreasing_pinnacles)
    : n_(n), pinnacles_(std::move(decreasing_pinnacles)) {
    if (n_ < 1)
        throw std::invalid_argument("n must be at least 1, got " + std::to_string(n_));
    for (std::size_t i = 0; i < pinnacles_.size(); ++i) {
        const int v = pinnacles_[i];
        if (v < 1 || v > n_)
            throw std::invalid_argument("pinnacle " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
        if (i > 0 && v >= pinnacles_[i - 1])
            throw std::invalid_argument("pinnacles must be strictly decreasing");
    }
}

PinnacleProblem PinnacleProblem::from_values(int n, std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate pinnacle values");
    return PinnacleProblem(n, std::move(sorted));
}

PinnacleProblem PinnacleProblem::from_set(int n, const std::set<int>& values) {
    return PinnacleProblem(n, std::vector<int>(values.rbegin(), values.rend()));
}

int PinnacleProblem::p(int i) const {
    if (i == 0)
        return n_ + 1;
    if (i == k() + 1)
        return 1;
    if (i < 0 || i > k() + 1)
        throw std::out_of_range("pinnacle index " + std::to_string(i));
    return pinnacles_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> PinnacleProblem::gaps() const {
    std::vector<int> g;
    g.reserve(pinnacles_.size() + 1);
    for (int i = 0; i <= k(); ++i)
        g.push_back(p(i) - p(i + 1) - 1);
    return g;
}

PinnacleProblem PinnacleProblem::without(int value) const {
    std::vector<int> rest;
    for (int v : pinnacles_)
        if (v != value)
            rest.push_back(v);
    return PinnacleProblem(n_, std::move(rest));
}

PinnacleProblem PinnacleProblem::with(int value) const {
    auto s = as_set();
    s.insert(value);
    return from_set(n_, s);
}

std::string PinnacleProblem::pinnacles_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < pinnacles_.size(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(pinnacles_[i]);
    }
    return s + "}";
}

}  // namespace pinnacle
