#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qalg/grading.hpp"
#include "qalg/linalg.hpp"
#include "qalg/ncpoly.hpp"
#include "qalg/presentation.hpp"
#include "qalg/word.hpp"

namespace qalg {

class IncompleteBasis : public std::runtime_error {
public:
    IncompleteBasis(int degree, const std::string& what)
        : std::runtime_error(what), degree_(degree)
    {
    }
    int degree() const { return degree_; }

private:
    int degree_;
};

// Aho-Corasick automaton over a set of words. A state is "dead" when the text read so far ends
// with one of the words; match() names a word ending there.
class TipAutomaton {
public:
    TipAutomaton() = default;
    TipAutomaton(const std::vector<Word>& tips, std::size_t alphabet);

    static constexpr std::uint32_t kRoot = 0;

    std::uint32_t next(std::uint32_t state, Letter l) const { return go_[state * alphabet_ + l]; }
    bool dead(std::uint32_t state) const { return match_[state] >= 0; }
    int match(std::uint32_t state) const { return match_[state]; }
    std::size_t num_states() const { return match_.size(); }
    std::size_t alphabet() const { return alphabet_; }

    // First occurrence (by end position) of a word of the set inside w: (start, word index).
    std::optional<std::pair<std::size_t, int>> find(const Word& w, const std::vector<Word>& tips) const;
    bool is_normal(const Word& w) const;

private:
    std::size_t alphabet_ = 0;
    std::vector<std::uint32_t> go_;
    std::vector<int> match_;
};

struct GbOptions {
    int max_degree = 10;
    int degree_cap = static_cast<int>(Word::kCapacity);
};

// Homogeneous two-sided Groebner basis computed degree by degree up to a truncation degree.
// The basis is reduced: elements are monic, tips are pairwise non-dividing, tails are normal.
template <class K>
class GroebnerBasis {
public:
    GroebnerBasis(const K& k, const Presentation& p, const std::vector<NcPoly<K>>& relations, GbOptions opts);

    const K& field() const { return k_; }
    const std::vector<NcPoly<K>>& elements() const { return elements_; }
    const std::vector<Word>& tips() const { return tips_; }
    const TipAutomaton& automaton() const { return automaton_; }
    int degree_of(const Word& w) const
    {
        int d = 0;
        for (Letter l : w)
            d += weights_[l];
        return d;
    }
    const std::vector<int>& weights() const { return weights_; }

    int truncation() const { return truncation_; }
    // All overlaps up to the truncation degree resolved, so the basis is valid through it.
    int complete_through() const { return finite_ ? std::numeric_limits<int>::max() : truncation_; }
    // No overlap above the truncation degree was skipped: the basis is complete in every degree.
    bool finite_complete() const { return finite_; }
    std::size_t skipped_overlaps() const { return skipped_; }
    bool complete_at(int d) const { return finite_ || d <= truncation_; }
    void require_complete(int d) const
    {
        if (!complete_at(d))
            throw IncompleteBasis(d, "Groebner basis complete only through degree " + std::to_string(truncation_) +
                                         ", degree " + std::to_string(d) + " required");
    }

    // Full reduction; thread-safe.
    NcPoly<K> normal_form(const NcPoly<K>& f) const;
    bool is_normal(const Word& w) const { return automaton_.is_normal(w); }

private:
    K k_;
    std::vector<int> weights_;
    std::vector<NcPoly<K>> elements_;
    std::vector<Word> tips_;
    TipAutomaton automaton_;
    int truncation_ = 0;
    bool finite_ = false;
    std::size_t skipped_ = 0;
};

// Normal words of one multidegree, with a reverse index.
struct NormalWords {
    std::vector<Word> words;
    std::unordered_map<Word, std::uint32_t, WordHash> index;
    std::size_t size() const { return words.size(); }
};

// An algebra A = k<V>/I together with its Groebner basis, grading and memoized normal forms.
// Not thread-safe: the caches are mutable. Share the GroebnerBasis instead.
template <class K>
class Algebra {
public:
    Algebra(const Presentation& p, const K& k, GbOptions opts, bool fine_grading = true);

    const K& field() const { return k_; }
    const Presentation& presentation() const { return pres_; }
    const Grading& grading() const { return grading_; }
    const GroebnerBasis<K>& gb() const { return *gb_; }
    std::size_t num_generators() const { return pres_.num_generators(); }

    NcPoly<K> convert(const NcPoly<RationalField>& f) const;
    NcPoly<K> letter(Letter l) const { return NcPoly<K>::word(k_, Word::letter(l)); }

    const NcPoly<K>& normal_form_word(const Word& w);
    NcPoly<K> normal_form(const NcPoly<K>& f);
    NcPoly<K> product(const NcPoly<K>& a, const NcPoly<K>& b) { return normal_form(multiply(k_, a, b)); }
    // Normal form of u * f for a word u.
    NcPoly<K> left_multiply(const Word& u, const NcPoly<K>& f);

    // Normal words whose class word is cw.
    const NormalWords& normal_words(const Word& cw);
    // Dimension of A in class word cw.
    std::size_t dim(const Word& cw) { return normal_words(cw).size(); }

    int degree(const Word& w) const { return gb_->degree_of(w); }
    std::string to_string(const NcPoly<K>& f) const { return poly_to_string(k_, f, names_); }
    const std::vector<std::string>& names() const { return names_; }

    // The same algebra and Groebner basis viewed with another grading (fresh caches).
    std::unique_ptr<Algebra> with_grading(Grading g) const
    {
        auto a = std::unique_ptr<Algebra>(new Algebra(*this, std::move(g)));
        return a;
    }

    void clear_caches()
    {
        nf_cache_.clear();
        nw_cache_.clear();
    }

private:
    Algebra(const Algebra& base, Grading g)
        : k_(base.k_), pres_(base.pres_), grading_(std::move(g)), names_(base.names_), gb_(base.gb_)
    {
    }

    K k_;
    Presentation pres_;
    Grading grading_;
    std::vector<std::string> names_;
    std::shared_ptr<GroebnerBasis<K>> gb_;
    std::unordered_map<Word, NcPoly<K>, WordHash> nf_cache_;
    std::unordered_map<Word, std::unique_ptr<NormalWords>, WordHash> nw_cache_;
};

// Counts normal words of each degree 0..D with the tip automaton.
std::vector<std::int64_t> count_normal_words(const TipAutomaton& a, const std::vector<int>& weights, int D);

// ---------------------------------------------------------------------------------------------

template <class K>
NcPoly<K> GroebnerBasis<K>::normal_form(const NcPoly<K>& f) const
{
    using Elem = typename K::Elem;
    std::map<Word, Elem, DeglexGreater> work;
    for (const auto& t : f.terms()) {
        require_complete(degree_of(t.word));
        work.emplace(t.word, t.coeff);
    }
    std::vector<typename NcPoly<K>::Term> out;
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        Elem c = it->second;
        work.erase(it);
        auto occ = automaton_.find(w, tips_);
        if (!occ) {
            out.push_back({w, c});
            continue;
        }
        const auto& g = elements_[occ->second];
        Word u = w.prefix(occ->first);
        Word v = w.drop_front(occ->first + g.leading_word().size());
        const auto& terms = g.terms();
        for (std::size_t i = 1; i < terms.size(); ++i) {
            Word x = u + terms[i].word + v;
            Elem delta = k_.neg(k_.mul(c, terms[i].coeff));
            auto [pos, inserted] = work.emplace(x, delta);
            if (!inserted) {
                pos->second = k_.add(pos->second, delta);
                if (k_.is_zero(pos->second))
                    work.erase(pos);
            }
        }
    }
    return NcPoly<K>::from_sorted(std::move(out));
}

template <class K>
GroebnerBasis<K>::GroebnerBasis(const K& k, const Presentation& p, const std::vector<NcPoly<K>>& relations,
                                GbOptions opts)
    : k_(k), weights_(p.weights())
{
    using Elem = typename K::Elem;
    if (opts.max_degree > opts.degree_cap || opts.max_degree > static_cast<int>(Word::kCapacity))
        throw DegreeOverflow("truncation degree " + std::to_string(opts.max_degree) + " exceeds the cap of " +
                             std::to_string(std::min<int>(opts.degree_cap, Word::kCapacity)));
    const int D = opts.max_degree;
    truncation_ = D;
    std::map<int, std::vector<NcPoly<K>>> pending;
    for (const auto& r : relations) {
        if (r.is_zero())
            continue;
        int d = degree_of(r.leading_word());
        if (d > D) {
            ++skipped_;
            continue;
        }
        pending[d].push_back(r);
    }
    automaton_ = TipAutomaton(tips_, weights_.size());

    auto add_overlaps = [&](std::size_t a, std::size_t b) {
        // tip(a) = u s, tip(b) = s v with s a nonempty proper piece: f_a v - u f_b
        const Word& ta = tips_[a];
        const Word& tb = tips_[b];
        for (std::size_t s = 1; s < ta.size() && s < tb.size(); ++s) {
            if (!tb.has_prefix(ta.suffix(s)))
                continue;
            Word u = ta.prefix(ta.size() - s);
            Word v = tb.drop_front(s);
            int d = degree_of(u) + degree_of(tb);
            if (d > D || u.size() + tb.size() > Word::kCapacity) {
                ++skipped_;
                continue;
            }
            pending[d].push_back(sub(k_, sandwich(Word{}, elements_[a], v), sandwich(u, elements_[b], Word{})));
        }
    };

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        auto& cands = node.mapped();
        // reduce against the lower-degree basis, then interreduce in degree d
        std::vector<NcPoly<K>> reduced;
        for (const auto& c : cands) {
            auto r = normal_form(c);
            if (!r.is_zero())
                reduced.push_back(std::move(r));
        }
        if (reduced.empty())
            continue;
        std::map<Word, std::uint32_t, DeglexGreater> col_of;
        for (const auto& r : reduced)
            for (const auto& t : r.terms())
                col_of.emplace(t.word, 0);
        std::vector<Word> words;
        for (auto& [w, c] : col_of) {
            c = static_cast<std::uint32_t>(words.size());
            words.push_back(w);
        }
        RowEchelon<K> ech(k_, words.size());
        for (const auto& r : reduced) {
            SparseVec<K> v;
            for (const auto& t : r.terms())
                v.emplace_back(col_of[t.word], t.coeff);
            std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            ech.insert(v);
        }
        // back substitution to reduced echelon form
        std::vector<SparseVec<K>> rows;
        for (const auto& r : ech.rows())
            rows.push_back(r.row);
        std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.front().first > y.front().first; });
        std::map<std::uint32_t, std::size_t> pivot_row;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Accumulator<K> acc(k_, words.size());
            acc.axpy(k_.one(), rows[i]);
            for (const auto& [col, j] : pivot_row) {
                if (col <= rows[i].front().first || !acc.touched(col))
                    continue;
                Elem f = acc.get(col);
                if (!k_.is_zero(f))
                    acc.axpy(k_.neg(f), rows[j]);
            }
            rows[i] = acc.extract();
            pivot_row.emplace(rows[i].front().first, i);
        }
        std::size_t first_new = elements_.size();
        std::vector<std::pair<Word, NcPoly<K>>> fresh;
        for (const auto& row : rows) {
            std::vector<typename NcPoly<K>::Term> terms;
            for (const auto& [col, c] : row)
                terms.push_back({words[col], c});
            auto g = NcPoly<K>::from_sorted(std::move(terms));
            fresh.emplace_back(g.leading_word(), std::move(g));
        }
        std::sort(fresh.begin(), fresh.end(), [](const auto& x, const auto& y) { return LexLess{}(x.first, y.first); });
        for (auto& [w, g] : fresh) {
            tips_.push_back(w);
            elements_.push_back(std::move(g));
        }
        automaton_ = TipAutomaton(tips_, weights_.size());
        for (std::size_t a = first_new; a < elements_.size(); ++a) {
            for (std::size_t b = 0; b < elements_.size(); ++b) {
                add_overlaps(a, b);
                if (b < first_new)
                    add_overlaps(b, a);
            }
        }
    }
    finite_ = skipped_ == 0;
}

template <class K>
Algebra<K>::Algebra(const Presentation& p, const K& k, GbOptions opts, bool fine_grading)
    : k_(k), pres_(p), grading_(fine_grading ? make_grading(p) : coarse_grading(p)), names_(p.names())
{
    std::vector<NcPoly<K>> rels;
    for (const auto& r : p.relations)
        rels.push_back(make_monic(k_, convert(r)));
    gb_ = std::make_shared<GroebnerBasis<K>>(k_, p, rels, opts);
}

template <class K>
NcPoly<K> Algebra<K>::convert(const NcPoly<RationalField>& f) const
{
    auto c = convert_rational(k_, f);
    if (!c)
        throw FieldError("coefficient with denominator divisible by the characteristic");
    return *c;
}

template <class K>
const NcPoly<K>& Algebra<K>::normal_form_word(const Word& w)
{
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end())
        return it->second;
    const auto& gb = *gb_;
    auto occ = gb.automaton().find(w, gb.tips());
    NcPoly<K> result;
    if (!occ) {
        result = NcPoly<K>::word(k_, w);
    } else {
        gb.require_complete(gb.degree_of(w));
        const auto& g = gb.elements()[occ->second];
        Word u = w.prefix(occ->first);
        Word v = w.drop_front(occ->first + g.leading_word().size());
        const auto& terms = g.terms();
        for (std::size_t i = 1; i < terms.size(); ++i) {
            NcPoly<K> part = normal_form_word(u + terms[i].word + v);
            result = sub(k_, result, scale(k_, terms[i].coeff, part));
        }
    }
    return nf_cache_.emplace(w, std::move(result)).first->second;
}

template <class K>
NcPoly<K> Algebra<K>::normal_form(const NcPoly<K>& f)
{
    if (f.size() == 1) {
        const auto& t = f.terms().front();
        return scale(k_, t.coeff, normal_form_word(t.word));
    }
    std::vector<typename NcPoly<K>::Term> acc;
    for (const auto& t : f.terms())
        for (const auto& s : normal_form_word(t.word).terms())
            acc.push_back({s.word, k_.mul(t.coeff, s.coeff)});
    return NcPoly<K>::from_terms(k_, std::move(acc));
}

template <class K>
NcPoly<K> Algebra<K>::left_multiply(const Word& u, const NcPoly<K>& f)
{
    return normal_form(sandwich(u, f, Word{}));
}

template <class K>
const NormalWords& Algebra<K>::normal_words(const Word& cw)
{
    auto it = nw_cache_.find(cw);
    if (it != nw_cache_.end())
        return *it->second;
    auto nw = std::make_unique<NormalWords>();
    const auto& aut = gb_->automaton();
    gb_->require_complete(grading_.degree(cw));
    // depth-first over positions of the class word, pruning at dead automaton states
    struct Frame {
        std::size_t pos;
        std::uint32_t state;
        Word word;
    };
    std::vector<Frame> stack{{0, TipAutomaton::kRoot, Word{}}};
    std::vector<Word> found;
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.pos == cw.size()) {
            found.push_back(f.word);
            continue;
        }
        auto letters = grading_.letters_at(cw, f.pos);
        for (auto li = letters.rbegin(); li != letters.rend(); ++li) {
            Letter l = *li;
            if (!grading_.fine) {
                bool ok = true;
                for (std::size_t i = 0; i < grading_.span(l); ++i)
                    ok = ok && cw[f.pos + i] == 0;
                if (!ok)
                    continue;
            }
            std::uint32_t s = aut.next(f.state, l);
            if (aut.dead(s))
                continue;
            Word w = f.word;
            w.push_back(l);
            stack.push_back({f.pos + grading_.span(l), s, w});
        }
    }
    nw->words = std::move(found);
    for (std::size_t i = 0; i < nw->words.size(); ++i)
        nw->index.emplace(nw->words[i], static_cast<std::uint32_t>(i));
    return *nw_cache_.emplace(cw, std::move(nw)).first->second;
}

}  // namespace qalg
