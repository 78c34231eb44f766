#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinnacle {

/// A permutation of [n] in one-line notation. The empty permutation (n = 0)
/// is allowed; it is the ordering of an empty pinnacle set.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless word is a bijection on [size].
    explicit Permutation(std::vector<int> word);
    Permutation(std::initializer_list<int> word);

    static Permutation identity(int n);

    /// Parses "2413" (single digits) or "2 4 1 3" / "2,4,1,3".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    /// 1-based access: at(1) is the first letter.
    int at(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }
    std::span<const int> word() const { return word_; }

    /// Compact form for size <= 9 ("2413"), space separated otherwise.
    std::string to_string() const;
    std::string to_spaced_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

/// A cyclic permutation of [m], stored rotated so that m is the last letter.
class CyclicPermutation {
public:
    /// Any rotation is accepted; the word is canonicalised. Requires m >= 1.
    explicit CyclicPermutation(std::vector<int> word);
    CyclicPermutation(std::initializer_list<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    std::span<const int> word() const { return word_; }
    std::string to_string() const;

    /// Values with both cyclic neighbours smaller. For size >= 2 the largest
    /// element is always one of them.
    std::set<int> pinnacles() const;

    /// Drops the trailing maximum: the inverse of cyclic_completion.
    Permutation truncate() const;

    auto operator<=>(const CyclicPermutation&) const = default;

private:
    std::vector<int> word_;
};

/// Values pi_i, 2 <= i <= n-1, with pi_{i-1} < pi_i > pi_{i+1}.
std::set<int> pinnacle_set(const Permutation& p);

/// Appends n+1 to the one-line notation of p.
CyclicPermutation cyclic_completion(const Permutation& p);

/// Number of maximal cyclic runs of entries >= level, for 2 <= level <= m
/// where m = c.size(). std::out_of_range otherwise.
int segment_count(const CyclicPermutation& c, int level);

/// sigma_hat(i) = k + 1 - sigma(i).
Permutation complement(const Permutation& s);

/// The order in which the pinnacles p_1 > ... > p_k of p appear from left to
/// right, as a permutation of [k]: the j-th pinnacle read is p_{sigma(j)}.
Permutation pinnacle_ordering(const Permutation& p);

}  // namespace pinnacle
