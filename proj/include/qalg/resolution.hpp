#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "qalg/degreewise.hpp"
#include "qalg/gbasis.hpp"

namespace qalg {

// Bigraded table b(i, j) = dim Ext^{i,j}_A(k, k) for 0 <= i <= imax, 0 <= j <= jmax.
struct BettiTable {
    int imax = 0, jmax = 0;
    std::vector<std::vector<std::int64_t>> b;

    BettiTable() = default;
    BettiTable(int I, int J) : imax(I), jmax(J), b(I + 1, std::vector<std::int64_t>(J + 1, 0)) {}

    std::int64_t at(int i, int j) const
    {
        if (i < 0 || j < 0 || i > imax || j > jmax)
            return 0;
        return b[i][j];
    }
    std::int64_t row_total(int i) const
    {
        std::int64_t s = 0;
        for (int j = 0; j <= jmax; ++j)
            s += b[i][j];
        return s;
    }
    bool operator==(const BettiTable&) const = default;
};

// Class words of Anick chains. Vertices of the chain graph are the letters and the proper
// suffixes of tips; u -> v when uv contains exactly one tip occurrence and it ends uv. The
// n-chains are the words read along paths of n + 1 vertices starting at a letter.
// Returns, for n = 0..max_n, the class words of n-chains of degree at most jmax.
template <class K>
std::vector<std::set<Word, LexLess>> chain_class_words(const Algebra<K>& A, int max_n, int jmax)
{
    const auto& gb = A.gb();
    const auto& aut = gb.automaton();
    const Grading& g = A.grading();
    std::vector<Word> vertices;
    std::unordered_set<Word, WordHash> seen;
    for (std::size_t l = 0; l < A.num_generators(); ++l) {
        Word w = Word::letter(static_cast<Letter>(l));
        if (seen.insert(w).second)
            vertices.push_back(w);
    }
    for (const auto& t : gb.tips())
        for (std::size_t s = 1; s < t.size(); ++s) {
            Word w = t.suffix(s);
            if (seen.insert(w).second)
                vertices.push_back(w);
        }
    std::vector<std::vector<std::uint32_t>> edges(vertices.size());
    for (std::size_t u = 0; u < vertices.size(); ++u)
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            if (vertices[u].size() + vertices[v].size() > Word::kCapacity)
                continue;
            Word w = vertices[u] + vertices[v];
            std::uint32_t s = TipAutomaton::kRoot;
            int hits = 0;
            bool last = false;
            for (std::size_t i = 0; i < w.size(); ++i) {
                s = aut.num_states() ? aut.next(s, w[i]) : 0;
                if (aut.num_states() && aut.dead(s)) {
                    ++hits;
                    last = i + 1 == w.size();
                }
            }
            if (hits == 1 && last)
                edges[u].push_back(static_cast<std::uint32_t>(v));
        }
    std::vector<std::set<Word, LexLess>> out(max_n + 1);
    std::set<std::pair<std::uint32_t, Word>, bool (*)(const std::pair<std::uint32_t, Word>&,
                                                       const std::pair<std::uint32_t, Word>&)>
        level([](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first < b.first;
            return LexLess{}(a.second, b.second);
        });
    for (std::size_t l = 0; l < A.num_generators(); ++l) {
        Word cw = g.class_word(Word::letter(static_cast<Letter>(l)));
        if (g.degree(cw) <= jmax)
            level.insert({static_cast<std::uint32_t>(l), cw});
    }
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& st : level)
            out[n].insert(st.second);
        if (n == max_n)
            break;
        decltype(level) next(level.key_comp());
        for (const auto& [u, cw] : level)
            for (std::uint32_t v : edges[u]) {
                Word add = g.class_word(vertices[v]);
                if (cw.size() + add.size() > Word::kCapacity || g.degree(cw) + g.degree(add) > jmax)
                    continue;
                next.insert({v, cw + add});
            }
        level = std::move(next);
    }
    return out;
}

struct ResolutionOptions {
    int imax = 4;
    int jmax = 6;
    // Consider every multidegree instead of only the multidegrees of Anick chains.
    bool exhaustive = false;
};

// Minimal graded free resolution of the trivial module k, computed degreewise in the
// multigrading. P^0 = A with generator at the empty word; P^1 has one generator per letter.
template <class K>
struct Resolution {
    ResolutionOptions opts;
    std::vector<std::vector<Word>> tau;  // tau[i][g]: multidegree of generator g of P^i
    std::vector<SparseMatrix<K>> d;      // d[i-1] : P^i -> P^{i-1}
    std::size_t multidegrees_examined = 0;

    int degree(const Grading& g, int i, std::size_t gen) const { return g.degree(tau[i][gen]); }

    BettiTable betti(const Grading& g) const
    {
        BettiTable t(opts.imax, opts.jmax);
        for (std::size_t i = 0; i < tau.size(); ++i)
            for (const auto& w : tau[i])
                ++t.b[i][g.degree(w)];
        return t;
    }
};

template <class K>
Resolution<K> minimal_resolution(Algebra<K>& A, ResolutionOptions opts)
{
    const K& k = A.field();
    const Grading& g = A.grading();
    A.gb().require_complete(opts.jmax);
    Resolution<K> res;
    res.opts = opts;
    res.tau.push_back({Word{}});
    if (opts.imax < 1)
        return res;
    // P^1: one generator per letter, d_1 = the column of letters
    {
        std::vector<Word> t;
        SparseMatrix<K> d1;
        d1.cols = 1;
        for (std::size_t l = 0; l < A.num_generators(); ++l) {
            Word cw = g.class_word(Word::letter(static_cast<Letter>(l)));
            if (g.degree(cw) > opts.jmax)
                continue;
            t.push_back(cw);
            d1.rows.push_back({{0u, A.letter(static_cast<Letter>(l))}});
        }
        res.tau.push_back(std::move(t));
        res.d.push_back(std::move(d1));
    }
    std::vector<std::set<Word, LexLess>> chains;
    if (!opts.exhaustive && opts.imax >= 2)
        chains = chain_class_words(A, opts.imax - 1, opts.jmax);

    for (int i = 2; i <= opts.imax; ++i) {
        std::vector<Word> cands;
        if (opts.exhaustive) {
            for (int deg = 1; deg <= opts.jmax; ++deg)
                for (auto& w : g.class_words_of_degree(deg))
                    cands.push_back(w);
        } else {
            cands.assign(chains[i - 1].begin(), chains[i - 1].end());
        }
        std::stable_sort(cands.begin(), cands.end(), [&](const Word& a, const Word& b) {
            int da = g.degree(a), db = g.degree(b);
            if (da != db)
                return da < db;
            return LexLess{}(a, b);
        });
        std::vector<Word> tau_i;
        SparseMatrix<K> di;
        di.cols = res.tau[i - 1].size();
        const SparseMatrix<K>& prev = res.d[i - 2];
        for (const Word& sigma : cands) {
            ComponentBasis src = make_component(A, res.tau[i - 1], sigma);
            if (src.size() == 0)
                continue;
            ++res.multidegrees_examined;
            ComponentBasis tgt = make_component(A, res.tau[i - 2], sigma);
            std::vector<SparseVec<K>> rows;
            rows.reserve(src.size());
            for (std::size_t e = 0; e < src.size(); ++e)
                rows.push_back(image_of(A, prev, src.elems[e].first, src.word(e), tgt));
            auto ker = kernel_basis(k, tgt.size(), rows);
            if (ker.empty())
                continue;
            RowEchelon<K> span(k, src.size());
            for (std::size_t h = 0; h < tau_i.size(); ++h) {
                const Word& th = tau_i[h];
                if (th.size() >= sigma.size() || !sigma.has_suffix(th))
                    continue;
                const NormalWords& nw = A.normal_words(sigma.prefix(sigma.size() - th.size()));
                for (const Word& rho : nw.words)
                    span.insert(image_of(A, di, static_cast<std::uint32_t>(h), rho, src));
            }
            for (const auto& v : ker) {
                if (span.insert(v)) {
                    tau_i.push_back(sigma);
                    di.rows.push_back(vector_to_row(k, src, v));
                }
            }
        }
        res.tau.push_back(std::move(tau_i));
        res.d.push_back(std::move(di));
    }
    return res;
}

// The resolution as a complex P^0 <- P^1 <- ... <- P^imax.
template <class K>
GradedComplex<K> as_graded_complex(const Resolution<K>& r, const Grading& g)
{
    GradedComplex<K> c;
    c.tau = r.tau;
    c.d = r.d;
    c.offset = 0;
    for (const auto& t : r.tau) {
        std::vector<int> s;
        for (const auto& w : t)
            s.push_back(g.degree(w));
        c.shifts.push_back(s);
    }
    return c;
}

}  // namespace qalg
