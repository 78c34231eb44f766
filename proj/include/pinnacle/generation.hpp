#pragma once

#include "pinnacle/lattice_path.hpp"
#include "pinnacle/permutation.hpp"
#include "pinnacle/problem.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace pinnacle {

enum class Side : std::uint8_t { Left, Right };

/// Attach the new element to one end of an existing segment.
struct AttachChoice {
    int segment;
    Side side;
    bool operator==(const AttachChoice&) const = default;
};

/// Join two distinct segments as left + new element + right.
struct JoinChoice {
    int left;
    int right;
    bool operator==(const JoinChoice&) const = default;
};

/// Up steps carry no choice.
using StepChoice = std::variant<std::monostate, AttachChoice, JoinChoice>;
using ChoiceSequence = std::vector<StepChoice>;

/// Number of choices available for a step taken at the given height.
int choice_count(Step step, int height);

/// The index-th choice (0-based) for a step at a height. Horizontal: index/2
/// is the segment, even indices attach on the left. Down: index/height is the
/// right-hand segment, the remainder ranks the left one among the others.
StepChoice choice_at(Step step, int height, int index);

/// Every valid choice sequence for m, lexicographically. There are
/// motzkin_weight(m) of them.
std::vector<ChoiceSequence> all_choice_sequences(const LatticePath& m);

/// Builds the permutation of [n] whose cyclic completion has Motzkin type m.
/// Elements n+1, n, ..., 2 are inserted one per step into a list of segments
/// kept in creation order (a join removes its two segments and appends the
/// result). The last segment is closed with 1 and rotated so that n+1 ends
/// the word, which is then dropped.
/// std::invalid_argument if m is not a Motzkin path of length n-1 or a
/// choice is out of range for its step.
Permutation construct_from_choices(const LatticePath& m, const ChoiceSequence& choices, int n);

/// Lazily generates every permutation of S_n(P) exactly once. Outer loop:
/// Dyck types in lexicographic order, skipping those of weight 0; then the
/// placement of each run of Down steps inside its gap (lexicographic subsets,
/// last gap fastest); then the choice sequences of the resulting Motzkin
/// path. Each output costs O(n) amortised.
class PermutationGenerator {
public:
    explicit PermutationGenerator(const PinnacleProblem& prob);

    std::optional<Permutation> next();

    /// The Motzkin path of the permutation last returned by next().
    const LatticePath& current_path() const { return path_; }

private:
    bool can_take(int i, int d) const;
    bool first_dyck();
    bool next_dyck();
    void fill_dyck_from(int i);
    void first_placements();
    bool next_placements();
    void rebuild_path();
    void first_choices();
    bool next_choices();
    Permutation build() const;

    int n_;
    int k_;
    std::vector<int> gaps_;
    // Down-run lengths d_1..d_k (index 0 unused, d_0 = 0).
    std::vector<int> downs_;
    // ends_[i]: height right after the i-th Up step.
    std::vector<int> ends_;
    // completable_[i][h]: runs i..k can be chosen when the i-th Up step ends
    // at height h.
    std::vector<std::vector<char>> completable_;
    // Chosen offsets (0-based, increasing) of the Down steps inside each gap.
    std::vector<std::vector<int>> placements_;
    LatticePath path_;
    std::vector<int> step_heights_;
    std::vector<int> radix_;
    std::vector<int> choice_index_;
    bool started_ = false;
    bool done_ = false;
};

/// Stream over S_n(P); call next() until it returns nullopt.
inline PermutationGenerator generate_all(const PinnacleProblem& prob) { return PermutationGenerator(prob); }

/// Every sigma in S_k that is an admissible ordering of P, lexicographically.
/// Guarded to k <= max_k; std::domain_error for inadmissible P.
std::vector<Permutation> list_admissible_orderings(const PinnacleProblem& prob, int max_k = 10);

}  // namespace pinnacle
