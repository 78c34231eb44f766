#include "pinnacle/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace pinnacle {

namespace {

void require_bijection(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::string join(std::span<const int> word, bool compact) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i > 0)
            s += ' ';
        s += std::to_string(word[i]);
    }
    return s;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) { require_bijection(word_); }

Permutation::Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> w;
    const bool separated = text.find_first_of(" ,") != std::string_view::npos;
    if (separated) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ' ' || text[i] == ','))
                ++i;
            if (i == text.size())
                break;
            int v = 0;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (i == start)
                throw std::invalid_argument("bad permutation: " + std::string(text));
            w.push_back(v);
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad permutation: " + std::string(text));
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const { return join(word_, size() <= 9); }

std::string Permutation::to_spaced_string() const { return join(word_, false); }

CyclicPermutation::CyclicPermutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty())
        throw std::invalid_argument("cyclic permutation must be nonempty");
    require_bijection(word_);
    auto top = std::find(word_.begin(), word_.end(), size());
    std::rotate(word_.begin(), top + 1, word_.end());
}

CyclicPermutation::CyclicPermutation(std::initializer_list<int> word)
    : CyclicPermutation(std::vector<int>(word)) {}

std::string CyclicPermutation::to_string() const { return join(word_, size() <= 9); }

std::set<int> CyclicPermutation::pinnacles() const {
    std::set<int> out;
    const int m = size();
    if (m < 2)
        return out;
    for (int i = 0; i < m; ++i) {
        const int v = word_[static_cast<std::size_t>(i)];
        const int left = word_[static_cast<std::size_t>((i + m - 1) % m)];
        const int right = word_[static_cast<std::size_t>((i + 1) % m)];
        if (left < v && v > right)
            out.insert(v);
    }
    return out;
}

Permutation CyclicPermutation::truncate() const {
    return Permutation(std::vector<int>(word_.begin(), word_.end() - 1));
}

std::set<int> pinnacle_set(const Permutation& p) {
    std::set<int> out;
    auto w = p.word();
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1])
            out.insert(w[i]);
    return out;
}

CyclicPermutation cyclic_completion(const Permutation& p) {
    std::vector<int> w(p.word().begin(), p.word().end());
    w.push_back(p.size() + 1);
    return CyclicPermutation(std::move(w));
}

int segment_count(const CyclicPermutation& c, int level) {
    const int m = c.size();
    if (level < 2 || level > m)
        throw std::out_of_range("segment level " + std::to_string(level) + " outside [2, " + std::to_string(m) + "]");
    auto w = c.word();
    int runs = 0;
    for (int i = 0; i < m; ++i) {
        const int prev = w[static_cast<std::size_t>((i + m - 1) % m)];
        if (w[static_cast<std::size_t>(i)] >= level && prev < level)
            ++runs;
    }
    return runs;
}

Permutation complement(const Permutation& s) {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(s.size()));
    for (int v : s.word())
        w.push_back(s.size() + 1 - v);
    return Permutation(std::move(w));
}

Permutation pinnacle_ordering(const Permutation& p) {
    const auto pins = pinnacle_set(p);
    // Rank 1 is the largest pinnacle.
    std::vector<int> rank(static_cast<std::size_t>(p.size()) + 1, 0);
    int r = static_cast<int>(pins.size());
    for (int v : pins)
        rank[static_cast<std::size_t>(v)] = r--;
    std::vector<int> sigma;
    for (int v : p.word())
        if (rank[static_cast<std::size_t>(v)] != 0)
            sigma.push_back(rank[static_cast<std::size_t>(v)]);
    return Permutation(std::move(sigma));
}

}  // namespace pinnacle
