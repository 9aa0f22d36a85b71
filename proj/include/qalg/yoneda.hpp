#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qalg/resolution.hpp"

namespace qalg {

// Chain map lifting the cocycle dual to generator g2 of P^{i2}: F[s] : P^{i2+s} -> P^s with
// F[0](g2) = 1, F[0](other) = 0 and F[s] D_s = D_{i2+s} F[s-1].
template <class K>
struct ChainLift {
    std::size_t i2 = 0, g2 = 0;
    std::vector<SparseMatrix<K>> F;
};

// Yoneda products on Ext_A(k, k) computed from a minimal resolution. Ext^i has the basis dual to the
// generators of P^i, and e1 * e2 = e1 o (lift of e2) restricted to P^{i1+i2}.
template <class K>
class Yoneda {
public:
    Yoneda(Algebra<K>& A, const Resolution<K>& r) : A_(A), r_(r) {}

    std::size_t top() const { return r_.tau.size() - 1; }

    const ChainLift<K>& lift(std::size_t i2, std::size_t g2, std::size_t smax)
    {
        if (i2 < 1 || i2 > top() || g2 >= r_.tau[i2].size())
            throw std::out_of_range("no such Ext generator");
        smax = std::min(smax, top() - i2);
        auto key = std::make_pair(i2, g2);
        ChainLift<K>& L = lifts_[key];
        if (L.F.empty()) {
            L.i2 = i2;
            L.g2 = g2;
            SparseMatrix<K> f0;
            f0.cols = 1;
            f0.rows.resize(r_.tau[i2].size());
            f0.rows[g2].emplace_back(0u, NcPoly<K>::constant(A_.field(), A_.field().one()));
            L.F.push_back(std::move(f0));
        }
        const Word& t2 = r_.tau[i2][g2];
        while (L.F.size() <= smax) {
            std::size_t s = L.F.size();
            const SparseMatrix<K>& D = r_.d[i2 + s - 1];  // P^{i2+s} -> P^{i2+s-1}
            const SparseMatrix<K>& prev = L.F[s - 1];
            SparseMatrix<K> Fs;
            Fs.cols = r_.tau[s].size();
            Fs.rows.resize(r_.tau[i2 + s].size());
            for (std::size_t g = 0; g < Fs.rows.size(); ++g) {
                const Word& tg = r_.tau[i2 + s][g];
                if (!tg.has_suffix(t2))
                    continue;
                Word sigma = tg.prefix(tg.size() - t2.size());
                Solver& sv = solver(s, sigma);
                std::vector<std::pair<std::uint32_t, typename K::Elem>> acc;
                for (const auto& [h, a] : D.rows[g])
                    for (const auto& t : a.terms())
                        for (auto& [idx, c] : image_of(A_, prev, h, t.word, sv.tgt))
                            acc.emplace_back(idx, A_.field().mul(t.coeff, c));
                SparseVec<K> v = merge(std::move(acc));
                if (v.empty())
                    continue;
                auto x = sv.ech.solve(v);
                if (!x)
                    throw std::runtime_error("cocycle does not lift: the resolution is not exact");
                Fs.rows[g] = vector_to_row(A_.field(), sv.src, *x);
            }
            L.F.push_back(std::move(Fs));
        }
        return L;
    }

    // e_{i1,g1} * e_{i2,g2} as coordinates over the generators of P^{i1+i2}.
    SparseVec<K> product(std::size_t i1, std::size_t g1, std::size_t i2, std::size_t g2)
    {
        // Ext^0 = k is spanned by the unit
        if (i1 == 0 || i2 == 0) {
            std::size_t g = i1 == 0 ? g2 : g1;
            if ((i1 == 0 && g1 != 0) || (i2 == 0 && g2 != 0) || g >= r_.tau[i1 + i2].size())
                throw std::out_of_range("no such Ext generator");
            return {{static_cast<std::uint32_t>(g), A_.field().one()}};
        }
        auto all = products_with(i1, i2, g2);
        auto it = all.find(static_cast<std::uint32_t>(g1));
        return it == all.end() ? SparseVec<K>{} : it->second;
    }

    // For fixed e2 = e_{i2,g2}: the nonzero products e_{i1,g1} * e2 keyed by g1.
    std::map<std::uint32_t, SparseVec<K>> products_with(std::size_t i1, std::size_t i2, std::size_t g2)
    {
        std::map<std::uint32_t, SparseVec<K>> out;
        if (i1 + i2 > top())
            throw std::out_of_range("product beyond the computed resolution");
        const ChainLift<K>& L = lift(i2, g2, i1);
        const SparseMatrix<K>& F = L.F[i1];
        for (std::size_t g = 0; g < F.rows.size(); ++g)
            for (const auto& [g1, e] : F.rows[g]) {
                auto c = e.constant_term(A_.field());
                if (!A_.field().is_zero(c))
                    out[g1].emplace_back(static_cast<std::uint32_t>(g), c);
            }
        return out;
    }

private:
    struct Solver {
        ComponentBasis src, tgt;
        RowEchelon<K> ech;
    };
    struct KeyLess {
        bool operator()(const std::pair<std::size_t, Word>& a, const std::pair<std::size_t, Word>& b) const
        {
            if (a.first != b.first)
                return a.first < b.first;
            return LexLess{}(a.second, b.second);
        }
    };

    Solver& solver(std::size_t s, const Word& sigma)
    {
        auto key = std::make_pair(s, sigma);
        auto it = solvers_.find(key);
        if (it != solvers_.end())
            return it->second;
        ComponentBasis src = make_component(A_, r_.tau[s], sigma);
        ComponentBasis tgt = make_component(A_, r_.tau[s - 1], sigma);
        RowEchelon<K> ech(A_.field(), tgt.size(), true);
        for (std::size_t e = 0; e < src.size(); ++e)
            ech.insert(image_of(A_, r_.d[s - 1], src.elems[e].first, src.word(e), tgt), static_cast<std::uint32_t>(e));
        return solvers_.emplace(key, Solver{std::move(src), std::move(tgt), std::move(ech)}).first->second;
    }

    SparseVec<K> merge(std::vector<std::pair<std::uint32_t, typename K::Elem>> acc) const
    {
        const K& k = A_.field();
        std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec<K> v;
        for (auto& [i, c] : acc) {
            if (!v.empty() && v.back().first == i)
                v.back().second = k.add(v.back().second, c);
            else
                v.emplace_back(i, std::move(c));
        }
        std::erase_if(v, [&](const auto& e) { return k.is_zero(e.second); });
        return v;
    }

    Algebra<K>& A_;
    const Resolution<K>& r_;
    std::map<std::pair<std::size_t, std::size_t>, ChainLift<K>> lifts_;
    std::map<std::pair<std::size_t, Word>, Solver, KeyLess> solvers_;
};

// Decomposables in Ext: rank of the span of all products Ext^{i1} * Ext^{i2}, i1 + i2 = i, i1, i2 >= 1,
// per internal degree. Generators needed in (i, j) = b(i, j) - decomposable(i, j).
struct GenerationProfile {
    BettiTable betti;
    BettiTable decomposable;
    BettiTable fresh;
    // Ext^{i,i} = Ext^{1,1} * Ext^{i-1,i-1}, per i (index 0, 1 trivially true)
    std::vector<bool> diagonal_spanned;
};

template <class K>
GenerationProfile generation_profile(Algebra<K>& A, const Resolution<K>& r)
{
    const Grading& g = A.grading();
    const K& k = A.field();
    GenerationProfile out;
    out.betti = r.betti(g);
    int imax = r.opts.imax, jmax = r.opts.jmax;
    out.decomposable = BettiTable(imax, jmax);
    out.fresh = out.betti;
    out.diagonal_spanned.assign(imax + 1, true);
    Yoneda<K> Y(A, r);
    for (int i = 2; i <= imax && i < static_cast<int>(r.tau.size()); ++i) {
        std::size_t n = r.tau[i].size();
        std::vector<RowEchelon<K>> span, diag;
        for (int j = 0; j <= jmax; ++j) {
            span.emplace_back(k, n);
            diag.emplace_back(k, n);
        }
        for (int i1 = 1; i1 < i; ++i1) {
            int i2 = i - i1;
            for (std::size_t g2 = 0; g2 < r.tau[i2].size(); ++g2) {
                for (auto& [g1, v] : Y.products_with(i1, i2, g2)) {
                    int j = g.degree(r.tau[i1][g1]) + g.degree(r.tau[i2][g2]);
                    span[j].insert(v);
                    if (i1 == 1 && j == i && g.degree(r.tau[i2][g2]) == i2 && g.degree(r.tau[1][g1]) == 1)
                        diag[j].insert(v);
                }
            }
        }
        for (int j = 0; j <= jmax; ++j) {
            out.decomposable.b[i][j] = static_cast<std::int64_t>(span[j].rank());
            out.fresh.b[i][j] = out.betti.b[i][j] - out.decomposable.b[i][j];
        }
        if (i <= jmax)
            out.diagonal_spanned[i] = static_cast<std::int64_t>(diag[i].rank()) == out.betti.b[i][i];
    }
    return out;
}

}  // namespace qalg
