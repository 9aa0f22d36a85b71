#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/gbasis.hpp"
#include "qalg/linalg.hpp"
#include "qalg/module.hpp"

namespace qalg {

// Matrix over A stored by rows; row h lists the nonzero entries (column, element).
template <class K>
struct SparseMatrix {
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, NcPoly<K>>>> rows;

    std::size_t num_rows() const { return rows.size(); }
    const NcPoly<K>* find(std::size_t r, std::size_t c) const
    {
        for (const auto& e : rows[r])
            if (e.first == c)
                return &e.second;
        return nullptr;
    }
};

template <class K>
SparseMatrix<K> to_sparse(Algebra<K>& A, const MatrixSpec& m)
{
    SparseMatrix<K> out;
    out.cols = m.cols;
    out.rows.resize(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) {
            auto e = A.normal_form(A.convert(m.at(r, c)));
            if (!e.is_zero())
                out.rows[r].emplace_back(static_cast<std::uint32_t>(c), std::move(e));
        }
    return out;
}

// Basis of the multidegree-sigma part of a free module whose generators have multidegrees tau:
// pairs (generator h, normal word rho) with class(rho) tau_h = sigma.
struct ComponentBasis {
    Word sigma;
    std::vector<std::int64_t> offset;              // per generator, -1 when tau_h is not a suffix
    std::vector<const NormalWords*> words;         // per generator
    std::vector<std::pair<std::uint32_t, std::uint32_t>> elems;  // (generator, index into words)

    std::size_t size() const { return elems.size(); }
    std::optional<std::uint32_t> index_of(std::uint32_t h, const Word& rho) const
    {
        if (offset[h] < 0)
            return std::nullopt;
        auto it = words[h]->index.find(rho);
        if (it == words[h]->index.end())
            return std::nullopt;
        return static_cast<std::uint32_t>(offset[h] + it->second);
    }
    const Word& word(std::size_t e) const { return words[elems[e].first]->words[elems[e].second]; }
};

template <class K>
ComponentBasis make_component(Algebra<K>& A, const std::vector<Word>& tau, const Word& sigma)
{
    ComponentBasis b;
    b.sigma = sigma;
    b.offset.assign(tau.size(), -1);
    b.words.assign(tau.size(), nullptr);
    for (std::size_t h = 0; h < tau.size(); ++h) {
        if (!sigma.has_suffix(tau[h]))
            continue;
        const NormalWords& nw = A.normal_words(sigma.prefix(sigma.size() - tau[h].size()));
        b.offset[h] = static_cast<std::int64_t>(b.elems.size());
        b.words[h] = &nw;
        for (std::size_t i = 0; i < nw.size(); ++i)
            b.elems.emplace_back(static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(i));
    }
    return b;
}

class GradingMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Coordinates in `target` of rho * (row h of M).
template <class K>
SparseVec<K> image_of(Algebra<K>& A, const SparseMatrix<K>& M, std::uint32_t h, const Word& rho,
                      const ComponentBasis& target)
{
    const K& k = A.field();
    std::vector<std::pair<std::uint32_t, typename K::Elem>> out;
    for (const auto& [c, entry] : M.rows[h]) {
        for (const auto& t : entry.terms()) {
            const NcPoly<K>& nf = A.normal_form_word(rho + t.word);
            for (const auto& s : nf.terms()) {
                auto idx = target.index_of(c, s.word);
                if (!idx)
                    throw GradingMismatch("map entry leaves its multidegree");
                out.emplace_back(*idx, k.mul(t.coeff, s.coeff));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<K> merged;
    for (auto& [i, c] : out) {
        if (!merged.empty() && merged.back().first == i)
            merged.back().second = k.add(merged.back().second, c);
        else
            merged.emplace_back(i, std::move(c));
    }
    std::erase_if(merged, [&](const auto& e) { return k.is_zero(e.second); });
    return merged;
}

// Row vector over the generators from coordinates in a component basis.
template <class K>
std::vector<std::pair<std::uint32_t, NcPoly<K>>> vector_to_row(const K& k, const ComponentBasis& b, const SparseVec<K>& v)
{
    std::map<std::uint32_t, std::vector<typename NcPoly<K>::Term>> parts;
    for (const auto& [i, c] : v)
        parts[b.elems[i].first].push_back({b.word(i), c});
    std::vector<std::pair<std::uint32_t, NcPoly<K>>> row;
    for (auto& [h, terms] : parts) {
        auto p = NcPoly<K>::from_terms(k, std::move(terms));
        if (!p.is_zero())
            row.emplace_back(h, std::move(p));
    }
    return row;
}

// A chain complex of free modules with generator multidegrees, ready for degreewise linear algebra.
// d[i-1] : M_i -> M_{i-1}. Internal degree of a class word sigma is grading.degree(sigma) + offset.
template <class K>
struct GradedComplex {
    std::vector<std::vector<Word>> tau;
    std::vector<std::vector<int>> shifts;
    std::vector<SparseMatrix<K>> d;
    int offset = 0;

    std::size_t length() const { return d.size(); }
};

struct MultidegreeAssignment {
    std::vector<std::vector<Word>> tau;
    int offset = 0;
};

// Infers generator multidegrees from the entries: every nonzero entry (r, c) of d_i forces
// tau_{i,r} = class(entry) tau_{i-1,c}. With `augmented`, M_0 generators sit at the empty word.
// Returns nullopt when the entries are not compatible with the grading.
template <class K>
std::optional<MultidegreeAssignment> infer_multidegrees(const Algebra<K>& A, const ComplexSpec& c, bool augmented)
{
    const Grading& g = A.grading();
    std::size_t nmod = c.shifts.size();
    std::vector<std::vector<std::optional<Word>>> tau(nmod);
    for (std::size_t i = 0; i < nmod; ++i)
        tau[i].resize(c.shifts[i].size());
    // class word of each nonzero entry
    struct Edge {
        std::size_t i, r, col;
        Word cw;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= c.maps.size(); ++i) {
        const auto& m = c.maps[i - 1];
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t col = 0; col < m.cols; ++col) {
                const auto& e = m.at(r, col);
                if (e.is_zero())
                    continue;
                Word cw = g.class_word(e.leading_word());
                for (const auto& t : e.terms())
                    if (!(g.class_word(t.word) == cw))
                        return std::nullopt;
                edges.push_back({i, r, col, cw});
            }
    }
    std::optional<int> offset;
    if (augmented) {
        for (auto& t : tau[0])
            t = Word{};
        offset = c.shifts[0].empty() ? 0 : c.shifts[0][0];
    }
    auto propagate = [&]() -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& e : edges) {
                auto& hi = tau[e.i][e.r];
                auto& lo = tau[e.i - 1][e.col];
                if (lo && !hi) {
                    if (lo->size() + e.cw.size() > Word::kCapacity)
                        return false;
                    hi = e.cw + *lo;
                    changed = true;
                } else if (hi && !lo) {
                    if (!hi->has_prefix(e.cw))
                        return false;
                    lo = hi->drop_front(e.cw.size());
                    changed = true;
                } else if (hi && lo) {
                    if (!(*hi == e.cw + *lo))
                        return false;
                }
            }
        }
        return true;
    };
    auto filler = [&](int degree) -> std::optional<Word> {
        // smallest class of weight one, repeated
        for (std::size_t cl = 0; cl < g.num_classes(); ++cl)
            if (g.class_weight[cl] == 1) {
                if (degree < 0 || degree > static_cast<int>(Word::kCapacity))
                    return std::nullopt;
                Word w;
                for (int i = 0; i < degree; ++i)
                    w.push_back(static_cast<Letter>(cl));
                return w;
            }
        return std::nullopt;
    };
    for (;;) {
        if (!propagate())
            return std::nullopt;
        // seed the unassigned generator of smallest shift
        std::optional<std::pair<std::size_t, std::size_t>> pick;
        for (std::size_t i = 0; i < nmod; ++i)
            for (std::size_t r = 0; r < tau[i].size(); ++r)
                if (!tau[i][r] && (!pick || c.shifts[i][r] < c.shifts[pick->first][pick->second]))
                    pick = std::make_pair(i, r);
        if (!pick)
            break;
        int shift = c.shifts[pick->first][pick->second];
        if (!offset)
            offset = shift;
        auto w = filler(shift - *offset);
        if (!w)
            return std::nullopt;
        tau[pick->first][pick->second] = *w;
    }
    MultidegreeAssignment out;
    out.offset = offset.value_or(0);
    out.tau.resize(nmod);
    for (std::size_t i = 0; i < nmod; ++i)
        for (std::size_t r = 0; r < tau[i].size(); ++r) {
            if (g.degree(*tau[i][r]) + out.offset != c.shifts[i][r])
                return std::nullopt;
            out.tau[i].push_back(*tau[i][r]);
        }
    return out;
}

template <class K>
GradedComplex<K> make_graded_complex(Algebra<K>& A, const ComplexSpec& c, const MultidegreeAssignment& md)
{
    GradedComplex<K> gc;
    gc.tau = md.tau;
    gc.shifts = c.shifts;
    gc.offset = md.offset;
    for (const auto& m : c.maps)
        gc.d.push_back(to_sparse(A, m));
    return gc;
}

// Coarse multidegrees: every generator at 0^(shift - offset) with offset the smallest shift.
inline MultidegreeAssignment coarse_multidegrees(const ComplexSpec& c, bool augmented)
{
    MultidegreeAssignment md;
    int lo = 0;
    bool first = true;
    for (const auto& s : c.shifts)
        for (int x : s) {
            lo = first ? x : std::min(lo, x);
            first = false;
        }
    if (augmented && !c.shifts.empty() && !c.shifts[0].empty())
        lo = std::min(lo, c.shifts[0][0]);
    md.offset = lo;
    for (const auto& s : c.shifts) {
        std::vector<Word> t;
        for (int x : s) {
            Word w;
            for (int i = 0; i < x - lo; ++i)
                w.push_back(0);
            t.push_back(w);
        }
        md.tau.push_back(std::move(t));
    }
    return md;
}

}  // namespace qalg
