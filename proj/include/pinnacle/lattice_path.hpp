#pragma once

#include "pinnacle/exact_count.hpp"
#include "pinnacle/permutation.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinnacle {

// Declaration order is the enumeration order: U < H < D.
enum class Step : std::uint8_t { Up, Horizontal, Down };

int height_change(Step s);
char step_letter(Step s);

/// A word over {U, H, D}. Whether it is a Motzkin path, a Dyck path or a
/// prefix of one is a predicate on the value, not a separate type.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    /// "UHD" style text; std::invalid_argument on any other letter.
    static LatticePath parse(std::string_view letters);

    std::size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    std::span<const Step> steps() const { return steps_; }
    Step operator[](std::size_t i) const { return steps_[i]; }

    int count(Step s) const;
    int final_height() const;
    /// Height before each step plus the final height: length() + 1 entries.
    std::vector<int> heights() const;

    /// Never below height 0.
    bool stays_nonnegative() const;
    bool is_motzkin() const;
    bool is_dyck() const;
    /// No Horizontal step and never negative: a prefix of some Dyck path.
    bool is_dyck_prefix() const;

    /// Starting heights of the Up steps, in order.
    std::vector<int> up_step_start_heights() const;

    std::string to_string() const;

    auto operator<=>(const LatticePath&) const = default;

private:
    std::vector<Step> steps_;
};

/// Motzkin type of a cyclic permutation of size n+1: the path of length n-1
/// through the heights s_{n+1-i}(c) - 1. Its i-th step is Up exactly when
/// n+1-i is a cyclic pinnacle.
LatticePath motzkin_type(const CyclicPermutation& c);

/// Product of step weights: Up 1, Horizontal at height h 2(h+1), Down from h
/// to h-1 h(h+1). Accepts prefixes; std::domain_error if the path dips below
/// zero.
ExactCount motzkin_weight(const LatticePath& m);

/// Removes every Horizontal step.
LatticePath dyck_compression(const LatticePath& m);

/// Whether the Motzkin path m (length k-1) fits under the Dyck path d (k Up
/// steps): for 1 <= i <= k-1 the starting height of the i-th step of m is at
/// most the starting height of the i-th Up step of d.
bool is_compatible(const LatticePath& m, const LatticePath& d, int k);

/// Lazily enumerates every nonnegative path of a fixed length that returns to
/// height 0, with a per-position set of allowed steps, in lexicographic order
/// (U < H < D). Only complete paths are ever produced; dead ends are pruned
/// up front.
class PathEnumerator {
public:
    using StepMask = std::uint8_t;
    static constexpr StepMask kUp = 1;
    static constexpr StepMask kHorizontal = 2;
    static constexpr StepMask kDown = 4;
    static constexpr StepMask kAny = kUp | kHorizontal | kDown;

    explicit PathEnumerator(std::vector<StepMask> allowed);

    /// All Motzkin paths of the given length.
    static PathEnumerator motzkin(int length);
    /// Motzkin paths whose Up steps are exactly the given 1-based positions.
    static PathEnumerator motzkin_with_ups(int length, const std::set<int>& up_positions);
    /// Dyck paths with `semilength` Up steps.
    static PathEnumerator dyck(int semilength);

    std::optional<LatticePath> next();

private:
    bool feasible(std::size_t position, int height) const;
    bool complete_from(std::size_t position);

    std::vector<StepMask> allowed_;
    // reachable_[p][h]: some allowed completion exists from position p at
    // height h.
    std::vector<std::vector<char>> reachable_;
    std::vector<Step> current_;
    std::vector<int> height_before_;
    bool started_ = false;
    bool exhausted_ = false;
};

/// Streams the Motzkin paths of `length` whose Up steps sit exactly at
/// `forced_up_positions` (1-based), in lexicographic order.
PathEnumerator enumerate_motzkin(int length, const std::set<int>& forced_up_positions);

}  // namespace pinnacle
