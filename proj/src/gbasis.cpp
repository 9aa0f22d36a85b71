#include "qalg/gbasis.hpp"

#include <stdexcept>

namespace qalg {

TipAutomaton::TipAutomaton(const std::vector<Word>& tips, std::size_t alphabet) : alphabet_(alphabet)
{
    // trie
    std::vector<std::vector<std::int64_t>> child(1, std::vector<std::int64_t>(alphabet, -1));
    match_.assign(1, -1);
    for (std::size_t t = 0; t < tips.size(); ++t) {
        std::size_t s = 0;
        for (Letter l : tips[t]) {
            if (child[s][l] < 0) {
                child[s][l] = static_cast<std::int64_t>(child.size());
                child.emplace_back(alphabet, -1);
                match_.push_back(-1);
            }
            s = static_cast<std::size_t>(child[s][l]);
        }
        if (match_[s] < 0)
            match_[s] = static_cast<int>(t);
    }
    // breadth-first failure links, completing the transition table
    std::size_t n = child.size();
    go_.assign(n * alphabet, 0);
    std::vector<std::uint32_t> fail(n, 0);
    std::vector<std::uint32_t> queue;
    for (std::size_t l = 0; l < alphabet; ++l) {
        if (child[0][l] >= 0) {
            auto c = static_cast<std::uint32_t>(child[0][l]);
            go_[l] = c;
            fail[c] = 0;
            queue.push_back(c);
        }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::uint32_t s = queue[qi];
        if (match_[s] < 0)
            match_[s] = match_[fail[s]];
        for (std::size_t l = 0; l < alphabet; ++l) {
            if (child[s][l] >= 0) {
                auto c = static_cast<std::uint32_t>(child[s][l]);
                fail[c] = go_[fail[s] * alphabet + l];
                go_[s * alphabet + l] = c;
                queue.push_back(c);
            } else {
                go_[s * alphabet + l] = go_[fail[s] * alphabet + l];
            }
        }
    }
}

std::optional<std::pair<std::size_t, int>> TipAutomaton::find(const Word& w, const std::vector<Word>& tips) const
{
    if (alphabet_ == 0)
        return std::nullopt;
    std::uint32_t s = kRoot;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s = next(s, w[i]);
        if (match_[s] >= 0) {
            int t = match_[s];
            return std::make_pair(i + 1 - tips[t].size(), t);
        }
    }
    return std::nullopt;
}

bool TipAutomaton::is_normal(const Word& w) const
{
    if (alphabet_ == 0)
        return true;
    std::uint32_t s = kRoot;
    for (Letter l : w) {
        s = next(s, l);
        if (match_[s] >= 0)
            return false;
    }
    return true;
}

std::vector<std::int64_t> count_normal_words(const TipAutomaton& a, const std::vector<int>& weights, int D)
{
    std::size_t n = std::max<std::size_t>(a.num_states(), 1);
    // count[d][s]: normal words of degree d ending in automaton state s
    std::vector<std::vector<std::int64_t>> count(D + 1, std::vector<std::int64_t>(n, 0));
    count[0][TipAutomaton::kRoot] = 1;
    std::vector<std::int64_t> total(D + 1, 0);
    for (int d = 0; d <= D; ++d) {
        for (std::size_t s = 0; s < n; ++s) {
            std::int64_t c = count[d][s];
            if (c == 0)
                continue;
            if (__builtin_add_overflow(total[d], c, &total[d]))
                throw std::overflow_error("normal word count overflows 64 bits in degree " + std::to_string(d));
            for (std::size_t l = 0; l < weights.size(); ++l) {
                int e = d + weights[l];
                if (e > D)
                    continue;
                std::uint32_t t = a.num_states() ? a.next(static_cast<std::uint32_t>(s), static_cast<Letter>(l)) : 0;
                if (a.num_states() && a.dead(t))
                    continue;
                if (__builtin_add_overflow(count[e][t], c, &count[e][t]))
                    throw std::overflow_error("normal word count overflows 64 bits in degree " + std::to_string(e));
            }
        }
    }
    return total;
}

}  // namespace qalg
