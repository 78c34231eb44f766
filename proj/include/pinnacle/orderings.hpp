#pragma once

#include "pinnacle/exact_count.hpp"
#include "pinnacle/lattice_path.hpp"
#include "pinnacle/permutation.hpp"
#include "pinnacle/problem.hpp"

#include <vector>

namespace pinnacle {

/// Starting heights ell_1..ell_k of the Up steps of a Dyck path, used as a
/// ceiling for Motzkin paths. ell_1 = 0, 0 <= ell_i <= ell_{i-1} + 1.
class CeilingProfile {
public:
    /// std::invalid_argument if the sequence violates the invariants.
    explicit CeilingProfile(std::vector<int> heights);

    int k() const { return static_cast<int>(heights_.size()); }
    /// 1-based, as ell_i.
    int at(int i) const { return heights_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& heights() const { return heights_; }

    /// The Dyck path whose Up steps start at these heights, each Up step
    /// followed by just enough Down steps to reach the next one.
    LatticePath dyck_path() const;

    bool operator==(const CeilingProfile&) const = default;

private:
    std::vector<int> heights_;
};

/// S_n(P) is nonempty: p_i >= 3 + 2(k-i) for every 1 <= i <= k.
bool is_admissible_pinnacle_set(const PinnacleProblem& prob);

/// Profile of the maximal Dyck type D_P:
/// ell_1 = 0, ell_i = min(ell_{i-1} + 1, p_i - 3 - 2(k-i)).
/// std::domain_error if P is empty or inadmissible.
CeilingProfile maximal_dyck_type(const PinnacleProblem& prob);

/// Weighted count of Motzkin prefixes staying under the ceiling:
///   b(0,0) = 1,
///   b(i+1,j) = b(i,j-1) + 2(j+1) b(i,j) + (j+1)(j+2) b(i,j+1),
///   b(i,j) = 0 for j < 0 or (i <= k-2 and j > ell_{i+1}),
/// returning b(k-1, 0).
ExactCount order_count_under(const CeilingProfile& ceiling);

/// |O(P)|, the number of admissible pinnacle orderings.
/// std::domain_error for empty or inadmissible P.
ExactCount order_count(const PinnacleProblem& prob);

/// Same quantity by summing motzkin_weight over every Motzkin path of length
/// k-1 compatible with D_P. Guarded to k <= max_k.
ExactCount order_count_via_motzkin(const PinnacleProblem& prob, int max_k = 20);

/// Whether sigma is the pinnacle ordering of some permutation in S_n(P):
/// the Motzkin type of cyc(complement(sigma)) is compatible with D_P.
bool is_admissible_ordering(const Permutation& sigma, const PinnacleProblem& prob);

/// All k! orderings are admissible:
/// p_i >= min(2k - i + 2, 3(k + 1 - i)) for 2 <= i <= k-1.
bool is_maximally_admissible(const PinnacleProblem& prob);

enum class AlphaMode { Ceiling, Oracle };

/// Number of distinct values of |O(P)| over admissible P with |P| = k.
/// Ceiling mode runs the b-recurrence under every ceiling profile
/// (Catalan(k) of them); oracle mode enumerates admissible P inside [2k+1].
ExactCount alpha(int k, AlphaMode mode = AlphaMode::Ceiling);

/// Every sequence ell_1 = 0, 0 <= ell_i <= ell_{i-1} + 1 of length k, in
/// lexicographic order.
std::vector<CeilingProfile> all_ceiling_profiles(int k);

}  // namespace pinnacle
