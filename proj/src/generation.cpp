#include "pinnacle/generation.hpp"

#include "pinnacle/errors.hpp"
#include "pinnacle/orderings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pinnacle {

int choice_count(Step step, int height) {
    switch (step) {
    case Step::Up: return 1;
    case Step::Horizontal: return 2 * (height + 1);
    case Step::Down: return height * (height + 1);
    }
    return 0;
}

StepChoice choice_at(Step step, int height, int index) {
    if (index < 0 || index >= choice_count(step, height))
        throw std::out_of_range("choice index out of range");
    switch (step) {
    case Step::Up: return std::monostate{};
    case Step::Horizontal: return AttachChoice{index / 2, index % 2 == 0 ? Side::Left : Side::Right};
    case Step::Down: {
        // Major index picks the segment placed right of the new element.
        const int right = index / height;
        const int r = index % height;
        return JoinChoice{r + (r >= right ? 1 : 0), right};
    }
    }
    return std::monostate{};
}

std::vector<ChoiceSequence> all_choice_sequences(const LatticePath& m) {
    if (!m.stays_nonnegative())
        throw std::invalid_argument("path " + m.to_string() + " goes below height 0");
    const auto hs = m.heights();
    std::vector<int> radix(m.length());
    for (std::size_t i = 0; i < m.length(); ++i)
        radix[i] = choice_count(m[i], hs[i]);
    std::vector<ChoiceSequence> out;
    if (std::find(radix.begin(), radix.end(), 0) != radix.end())
        return out;
    std::vector<int> index(m.length(), 0);
    while (true) {
        ChoiceSequence seq;
        seq.reserve(m.length());
        for (std::size_t i = 0; i < m.length(); ++i)
            seq.push_back(choice_at(m[i], hs[i], index[i]));
        out.push_back(std::move(seq));
        std::size_t i = m.length();
        while (i > 0 && ++index[i - 1] == radix[i - 1])
            index[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

Permutation construct_from_choices(const LatticePath& m, const ChoiceSequence& choices, int n) {
    if (n < 1 || static_cast<int>(m.length()) != n - 1 || !m.is_motzkin())
        throw std::invalid_argument("construct_from_choices: " + m.to_string() + " is not a Motzkin path of length " +
                                    std::to_string(n - 1));
    if (choices.size() != m.length())
        throw std::invalid_argument("construct_from_choices: choice sequence length differs from path length");

    struct Segment {
        int head;
        int tail;
    };
    // right_of[v]: the element to the right of v inside its segment.
    std::vector<int> right_of(static_cast<std::size_t>(n) + 2, 0);
    std::vector<Segment> segments{{n + 1, n + 1}};
    auto bad = [&](std::size_t i) {
        return std::invalid_argument("construct_from_choices: invalid choice at step " + std::to_string(i + 1));
    };

    for (std::size_t i = 0; i < m.length(); ++i) {
        const int e = n - static_cast<int>(i);
        const int count = static_cast<int>(segments.size());
        switch (m[i]) {
        case Step::Up:
            if (!std::holds_alternative<std::monostate>(choices[i]))
                throw bad(i);
            segments.push_back({e, e});
            break;
        case Step::Horizontal: {
            const auto* c = std::get_if<AttachChoice>(&choices[i]);
            if (c == nullptr || c->segment < 0 || c->segment >= count)
                throw bad(i);
            auto& s = segments[static_cast<std::size_t>(c->segment)];
            if (c->side == Side::Left) {
                right_of[static_cast<std::size_t>(e)] = s.head;
                s.head = e;
            } else {
                right_of[static_cast<std::size_t>(s.tail)] = e;
                s.tail = e;
            }
            break;
        }
        case Step::Down: {
            const auto* c = std::get_if<JoinChoice>(&choices[i]);
            if (c == nullptr || c->left == c->right || c->left < 0 || c->right < 0 || c->left >= count ||
                c->right >= count)
                throw bad(i);
            const Segment left = segments[static_cast<std::size_t>(c->left)];
            const Segment right = segments[static_cast<std::size_t>(c->right)];
            right_of[static_cast<std::size_t>(left.tail)] = e;
            right_of[static_cast<std::size_t>(e)] = right.head;
            segments.erase(segments.begin() + std::max(c->left, c->right));
            segments.erase(segments.begin() + std::min(c->left, c->right));
            segments.push_back({left.head, right.tail});
            break;
        }
        }
    }

    // One segment over {2..n+1} remains; 1 closes the cycle at its right end.
    std::vector<int> cycle;
    cycle.reserve(static_cast<std::size_t>(n) + 1);
    for (int v = segments.front().head;; v = right_of[static_cast<std::size_t>(v)]) {
        cycle.push_back(v);
        if (v == segments.front().tail)
            break;
    }
    cycle.push_back(1);
    const auto top = std::find(cycle.begin(), cycle.end(), n + 1);
    std::vector<int> word(top + 1, cycle.end());
    word.insert(word.end(), cycle.begin(), top);
    return Permutation(std::move(word));
}

PermutationGenerator::PermutationGenerator(const PinnacleProblem& prob)
    : n_(prob.n()), k_(prob.k()), gaps_(prob.gaps()) {
    downs_.assign(static_cast<std::size_t>(k_) + 1, 0);
    ends_.assign(static_cast<std::size_t>(k_) + 2, 0);
    placements_.resize(static_cast<std::size_t>(k_) + 1);
    completable_.assign(static_cast<std::size_t>(k_) + 2, std::vector<char>(static_cast<std::size_t>(k_) + 2, 0));
    for (int i = k_; i >= 1; --i) {
        const int g = gaps_[static_cast<std::size_t>(i)];
        for (int h = 1; h <= i; ++h) {
            bool ok = false;
            if (i == k_) {
                ok = h <= g;
            } else {
                for (int d = 0; d <= std::min(h, g) && !ok; ++d)
                    ok = completable_[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(h - d + 1)] != 0;
            }
            completable_[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)] = ok;
        }
    }
}

bool PermutationGenerator::can_take(int i, int d) const {
    const int h = ends_[static_cast<std::size_t>(i)];
    if (d < 0 || d > h || d > gaps_[static_cast<std::size_t>(i)])
        return false;
    if (i == k_)
        return d == h;
    return completable_[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(h - d + 1)] != 0;
}

void PermutationGenerator::fill_dyck_from(int i) {
    for (; i <= k_; ++i) {
        int d = 0;
        while (!can_take(i, d))
            ++d;
        downs_[static_cast<std::size_t>(i)] = d;
        ends_[static_cast<std::size_t>(i + 1)] = ends_[static_cast<std::size_t>(i)] - d + 1;
    }
}

bool PermutationGenerator::first_dyck() {
    if (k_ == 0)
        return gaps_[0] >= 0;
    if (!completable_[1][1])
        return false;
    ends_[1] = 1;
    fill_dyck_from(1);
    return true;
}

bool PermutationGenerator::next_dyck() {
    for (int i = k_; i >= 1; --i) {
        for (int d = downs_[static_cast<std::size_t>(i)] + 1; d <= ends_[static_cast<std::size_t>(i)]; ++d) {
            if (can_take(i, d)) {
                downs_[static_cast<std::size_t>(i)] = d;
                ends_[static_cast<std::size_t>(i + 1)] = ends_[static_cast<std::size_t>(i)] - d + 1;
                fill_dyck_from(i + 1);
                return true;
            }
        }
    }
    return false;
}

void PermutationGenerator::first_placements() {
    for (int i = 1; i <= k_; ++i) {
        auto& c = placements_[static_cast<std::size_t>(i)];
        c.resize(static_cast<std::size_t>(downs_[static_cast<std::size_t>(i)]));
        std::iota(c.begin(), c.end(), 0);
    }
}

bool PermutationGenerator::next_placements() {
    for (int i = k_; i >= 1; --i) {
        auto& c = placements_[static_cast<std::size_t>(i)];
        const int d = static_cast<int>(c.size());
        const int g = gaps_[static_cast<std::size_t>(i)];
        int j = d - 1;
        while (j >= 0 && c[static_cast<std::size_t>(j)] == g - d + j)
            --j;
        if (j < 0)
            continue;
        ++c[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < d; ++t)
            c[static_cast<std::size_t>(t)] = c[static_cast<std::size_t>(t - 1)] + 1;
        for (int later = i + 1; later <= k_; ++later) {
            auto& r = placements_[static_cast<std::size_t>(later)];
            std::iota(r.begin(), r.end(), 0);
        }
        return true;
    }
    return false;
}

void PermutationGenerator::rebuild_path() {
    std::vector<Step> steps(static_cast<std::size_t>(gaps_[0]), Step::Horizontal);
    steps.reserve(static_cast<std::size_t>(std::max(n_ - 1, 0)));
    for (int i = 1; i <= k_; ++i) {
        steps.push_back(Step::Up);
        const auto start = steps.size();
        steps.resize(start + static_cast<std::size_t>(gaps_[static_cast<std::size_t>(i)]), Step::Horizontal);
        for (int offset : placements_[static_cast<std::size_t>(i)])
            steps[start + static_cast<std::size_t>(offset)] = Step::Down;
    }
    path_ = LatticePath(std::move(steps));
    step_heights_ = path_.heights();
    radix_.resize(path_.length());
    for (std::size_t s = 0; s < path_.length(); ++s)
        radix_[s] = choice_count(path_[s], step_heights_[s]);
}

void PermutationGenerator::first_choices() { choice_index_.assign(path_.length(), 0); }

bool PermutationGenerator::next_choices() {
    for (std::size_t s = choice_index_.size(); s-- > 0;) {
        if (++choice_index_[s] < radix_[s])
            return true;
        choice_index_[s] = 0;
    }
    return false;
}

Permutation PermutationGenerator::build() const {
    ChoiceSequence choices;
    choices.reserve(path_.length());
    for (std::size_t s = 0; s < path_.length(); ++s)
        choices.push_back(choice_at(path_[s], step_heights_[s], choice_index_[s]));
    return construct_from_choices(path_, choices, n_);
}

std::optional<Permutation> PermutationGenerator::next() {
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!first_dyck()) {
            done_ = true;
            return std::nullopt;
        }
        first_placements();
        rebuild_path();
        first_choices();
        return build();
    }
    if (next_choices())
        return build();
    if (next_placements()) {
        rebuild_path();
        first_choices();
        return build();
    }
    if (next_dyck()) {
        first_placements();
        rebuild_path();
        first_choices();
        return build();
    }
    done_ = true;
    return std::nullopt;
}

std::vector<Permutation> list_admissible_orderings(const PinnacleProblem& prob, int max_k) {
    const int k = prob.k();
    if (k > max_k)
        throw LimitExceeded("listing orderings is limited to k <= " + std::to_string(max_k));
    if (k == 0 || !is_admissible_pinnacle_set(prob))
        throw std::domain_error("pinnacle set " + prob.pinnacles_string() + " is not admissible");
    std::vector<int> word(static_cast<std::size_t>(k));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation sigma(word);
        if (is_admissible_ordering(sigma, prob))
            out.push_back(std::move(sigma));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace pinnacle
