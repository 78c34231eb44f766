#include "pinnacle/lattice_path.hpp"

#include <stdexcept>

namespace pinnacle {

int height_change(Step s) {
    switch (s) {
    case Step::Up: return 1;
    case Step::Horizontal: return 0;
    case Step::Down: return -1;
    }
    return 0;
}

char step_letter(Step s) {
    switch (s) {
    case Step::Up: return 'U';
    case Step::Horizontal: return 'H';
    case Step::Down: return 'D';
    }
    return '?';
}

LatticePath LatticePath::parse(std::string_view letters) {
    std::vector<Step> steps;
    steps.reserve(letters.size());
    for (char c : letters) {
        switch (c) {
        case 'U': steps.push_back(Step::Up); break;
        case 'H': steps.push_back(Step::Horizontal); break;
        case 'D': steps.push_back(Step::Down); break;
        default: throw std::invalid_argument("bad step letter in \"" + std::string(letters) + "\"");
        }
    }
    return LatticePath(std::move(steps));
}

int LatticePath::count(Step s) const {
    int c = 0;
    for (Step t : steps_)
        c += (t == s);
    return c;
}

int LatticePath::final_height() const {
    int h = 0;
    for (Step s : steps_)
        h += height_change(s);
    return h;
}

std::vector<int> LatticePath::heights() const {
    std::vector<int> hs;
    hs.reserve(steps_.size() + 1);
    int h = 0;
    hs.push_back(h);
    for (Step s : steps_)
        hs.push_back(h += height_change(s));
    return hs;
}

bool LatticePath::stays_nonnegative() const {
    int h = 0;
    for (Step s : steps_)
        if ((h += height_change(s)) < 0)
            return false;
    return true;
}

bool LatticePath::is_motzkin() const { return stays_nonnegative() && final_height() == 0; }

bool LatticePath::is_dyck() const { return is_motzkin() && count(Step::Horizontal) == 0; }

bool LatticePath::is_dyck_prefix() const { return stays_nonnegative() && count(Step::Horizontal) == 0; }

std::vector<int> LatticePath::up_step_start_heights() const {
    std::vector<int> out;
    int h = 0;
    for (Step s : steps_) {
        if (s == Step::Up)
            out.push_back(h);
        h += height_change(s);
    }
    return out;
}

std::string LatticePath::to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step t : steps_)
        s += step_letter(t);
    return s;
}

LatticePath motzkin_type(const CyclicPermutation& c) {
    const int m = c.size();
    if (m < 2)
        throw std::invalid_argument("motzkin_type needs a cyclic permutation of size >= 2");
    auto w = c.word();
    std::vector<int> pos(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i < m; ++i)
        pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;

    // Inserting e into the segments of level e+1: no larger neighbour opens a
    // segment, one extends a segment, two merge segments.
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(m - 2));
    for (int e = m - 1; e >= 2; --e) {
        const int i = pos[static_cast<std::size_t>(e)];
        const int left = w[static_cast<std::size_t>((i + m - 1) % m)];
        const int right = w[static_cast<std::size_t>((i + 1) % m)];
        const int larger = (left > e) + (right > e);
        steps.push_back(larger == 0 ? Step::Up : larger == 1 ? Step::Horizontal : Step::Down);
    }
    return LatticePath(std::move(steps));
}

ExactCount motzkin_weight(const LatticePath& m) {
    ExactCount w = 1;
    long h = 0;
    for (Step s : m.steps()) {
        switch (s) {
        case Step::Up: ++h; break;
        case Step::Horizontal: w *= 2 * (h + 1); break;
        case Step::Down:
            if (h == 0)
                throw std::domain_error("path " + m.to_string() + " goes below height 0");
            w *= h * (h + 1);
            --h;
            break;
        }
    }
    return w;
}

LatticePath dyck_compression(const LatticePath& m) {
    std::vector<Step> steps;
    for (Step s : m.steps())
        if (s != Step::Horizontal)
            steps.push_back(s);
    return LatticePath(std::move(steps));
}

bool is_compatible(const LatticePath& m, const LatticePath& d, int k) {
    if (k < 1 || static_cast<int>(m.length()) != k - 1 || d.count(Step::Up) != k)
        throw std::invalid_argument("is_compatible: need a path of length k-1 and a Dyck path with k Up steps (k = " +
                                    std::to_string(k) + ")");
    const auto ceiling = d.up_step_start_heights();
    const auto hs = m.heights();
    for (int i = 0; i < k - 1; ++i)
        if (hs[static_cast<std::size_t>(i)] > ceiling[static_cast<std::size_t>(i)])
            return false;
    return true;
}

PathEnumerator::PathEnumerator(std::vector<StepMask> allowed)
    : allowed_(std::move(allowed)), current_(allowed_.size()), height_before_(allowed_.size() + 1, 0) {
    const std::size_t len = allowed_.size();
    reachable_.assign(len + 1, std::vector<char>(len + 2, 0));
    reachable_[len][0] = 1;
    for (std::size_t p = len; p-- > 0;) {
        for (std::size_t h = 0; h <= len; ++h) {
            for (Step s : {Step::Up, Step::Horizontal, Step::Down}) {
                if (!(allowed_[p] & (1u << static_cast<unsigned>(s))))
                    continue;
                const long h2 = static_cast<long>(h) + height_change(s);
                if (h2 >= 0 && h2 <= static_cast<long>(len) && reachable_[p + 1][static_cast<std::size_t>(h2)]) {
                    reachable_[p][h] = 1;
                    break;
                }
            }
        }
    }
}

PathEnumerator PathEnumerator::motzkin(int length) {
    return PathEnumerator(std::vector<StepMask>(static_cast<std::size_t>(length), kAny));
}

PathEnumerator PathEnumerator::motzkin_with_ups(int length, const std::set<int>& up_positions) {
    std::vector<StepMask> allowed(static_cast<std::size_t>(length), kHorizontal | kDown);
    for (int p : up_positions) {
        if (p < 1 || p > length)
            throw std::invalid_argument("forced Up position " + std::to_string(p) + " outside [1, " +
                                        std::to_string(length) + "]");
        allowed[static_cast<std::size_t>(p - 1)] = kUp;
    }
    return PathEnumerator(std::move(allowed));
}

PathEnumerator PathEnumerator::dyck(int semilength) {
    return PathEnumerator(std::vector<StepMask>(static_cast<std::size_t>(2 * semilength), kUp | kDown));
}

bool PathEnumerator::feasible(std::size_t position, int height) const {
    return height >= 0 && height < static_cast<int>(reachable_[position].size()) &&
           reachable_[position][static_cast<std::size_t>(height)];
}

bool PathEnumerator::complete_from(std::size_t position) {
    for (std::size_t q = position; q < allowed_.size(); ++q) {
        const int h = height_before_[q];
        bool placed = false;
        for (Step s : {Step::Up, Step::Horizontal, Step::Down}) {
            if ((allowed_[q] & (1u << static_cast<unsigned>(s))) && feasible(q + 1, h + height_change(s))) {
                current_[q] = s;
                height_before_[q + 1] = h + height_change(s);
                placed = true;
                break;
            }
        }
        if (!placed)
            return false;
    }
    return true;
}

std::optional<LatticePath> PathEnumerator::next() {
    if (exhausted_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!feasible(0, 0) || !complete_from(0)) {
            exhausted_ = true;
            return std::nullopt;
        }
        return LatticePath(current_);
    }
    for (std::size_t p = allowed_.size(); p-- > 0;) {
        const int h = height_before_[p];
        for (Step s : {Step::Horizontal, Step::Down}) {
            if (s <= current_[p])
                continue;
            if ((allowed_[p] & (1u << static_cast<unsigned>(s))) && feasible(p + 1, h + height_change(s))) {
                current_[p] = s;
                height_before_[p + 1] = h + height_change(s);
                complete_from(p + 1);
                return LatticePath(current_);
            }
        }
    }
    exhausted_ = true;
    return std::nullopt;
}

PathEnumerator enumerate_motzkin(int length, const std::set<int>& forced_up_positions) {
    return PathEnumerator::motzkin_with_ups(length, forced_up_positions);
}

}  // namespace pinnacle
