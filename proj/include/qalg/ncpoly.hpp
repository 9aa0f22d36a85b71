#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/scalar.hpp"
#include "qalg/word.hpp"

namespace qalg {

// Element of the free algebra: a finite linear combination of words with nonzero coefficients.
// Terms are kept sorted strictly decreasing in deglex, so terms().front() is the leading term.
template <class K>
class NcPoly {
public:
    using Elem = typename K::Elem;
    struct Term {
        Word word;
        Elem coeff;
    };

    NcPoly() = default;

    static NcPoly monomial(const K& k, const Word& w, Elem c)
    {
        NcPoly p;
        if (!k.is_zero(c))
            p.terms_.push_back({w, std::move(c)});
        return p;
    }
    static NcPoly word(const K& k, const Word& w) { return monomial(k, w, k.one()); }
    static NcPoly constant(const K& k, Elem c) { return monomial(k, Word{}, std::move(c)); }

    // Sorts and combines arbitrary terms, dropping zeros.
    static NcPoly from_terms(const K& k, std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return compare_deglex(a.word, b.word) > 0; });
        NcPoly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().word == t.word) {
                p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
                if (k.is_zero(p.terms_.back().coeff))
                    p.terms_.pop_back();
            } else if (!k.is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }
    // Terms already strictly decreasing with nonzero coefficients.
    static NcPoly from_sorted(std::vector<Term> terms)
    {
        NcPoly p;
        p.terms_ = std::move(terms);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Word& leading_word() const { return terms_.front().word; }
    const Elem& leading_coeff() const { return terms_.front().coeff; }

    // Length of the words when all terms have the same length.
    std::optional<std::size_t> uniform_length() const
    {
        if (terms_.empty())
            return std::nullopt;
        for (const auto& t : terms_)
            if (t.word.size() != terms_.front().word.size())
                return std::nullopt;
        return terms_.front().word.size();
    }

    // Coefficient of the empty word.
    Elem constant_term(const K& k) const
    {
        if (!terms_.empty() && terms_.back().word.empty())
            return terms_.back().coeff;
        return k.zero();
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b)
    {
        if (a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].word == b.terms_[i].word) || !(a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }

private:
    std::vector<Term> terms_;
};

// f + g or f - g, merging the sorted term lists.
template <class K>
NcPoly<K> combine(const K& k, const NcPoly<K>& f, const NcPoly<K>& g, bool subtract)
{
    using Term = typename NcPoly<K>::Term;
    const auto& a = f.terms();
    const auto& b = g.terms();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c = i == a.size() ? 1 : j == b.size() ? -1 : -compare_deglex(a[i].word, b[j].word);
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back({b[j].word, subtract ? k.neg(b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            auto s = subtract ? k.sub(a[i].coeff, b[j].coeff) : k.add(a[i].coeff, b[j].coeff);
            if (!k.is_zero(s))
                out.push_back({a[i].word, std::move(s)});
            ++i;
            ++j;
        }
    }
    return NcPoly<K>::from_sorted(std::move(out));
}

template <class K>
NcPoly<K> add(const K& k, const NcPoly<K>& f, const NcPoly<K>& g)
{
    return combine(k, f, g, false);
}

template <class K>
NcPoly<K> sub(const K& k, const NcPoly<K>& f, const NcPoly<K>& g)
{
    return combine(k, f, g, true);
}

template <class K>
NcPoly<K> scale(const K& k, const typename K::Elem& c, const NcPoly<K>& f)
{
    if (k.is_zero(c))
        return {};
    std::vector<typename NcPoly<K>::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms())
        out.push_back({t.word, k.mul(c, t.coeff)});
    return NcPoly<K>::from_sorted(std::move(out));
}

// u * f * v for words u, v; the order is multiplicative so sortedness is preserved.
template <class K>
NcPoly<K> sandwich(const Word& u, const NcPoly<K>& f, const Word& v)
{
    std::vector<typename NcPoly<K>::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms())
        out.push_back({u + t.word + v, t.coeff});
    return NcPoly<K>::from_sorted(std::move(out));
}

// Free-algebra product: bilinear extension of concatenation.
template <class K>
NcPoly<K> multiply(const K& k, const NcPoly<K>& f, const NcPoly<K>& g)
{
    std::vector<typename NcPoly<K>::Term> terms;
    terms.reserve(f.size() * g.size());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms())
            terms.push_back({a.word + b.word, k.mul(a.coeff, b.coeff)});
    return NcPoly<K>::from_terms(k, std::move(terms));
}

// Divides by the leading coefficient.
template <class K>
NcPoly<K> make_monic(const K& k, const NcPoly<K>& f)
{
    if (f.is_zero() || k.is_one(f.leading_coeff()))
        return f;
    return scale(k, k.inv(f.leading_coeff()), f);
}

// Maps coefficients into another field; a coefficient that cannot be represented makes the result empty.
template <class K>
std::optional<NcPoly<K>> convert_rational(const K& k, const NcPoly<RationalField>& f)
{
    std::vector<typename NcPoly<K>::Term> terms;
    for (const auto& t : f.terms()) {
        auto c = k.from_rational(t.coeff);
        if (!c)
            return std::nullopt;
        terms.push_back({t.word, *c});
    }
    return NcPoly<K>::from_terms(k, std::move(terms));
}

// Renders with signs, e.g. "n*p - n*q" or "3*a*b + 1/2*c*d". Prime-field coefficients are printed
// as their canonical representative in [0, p).
template <class K>
std::string poly_to_string(const K& k, const NcPoly<K>& f, const std::vector<std::string>& names)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::string c = k.to_string(t.coeff);
        bool negative = !c.empty() && c[0] == '-';
        if (negative)
            c.erase(0, 1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (t.word.empty()) {
            out += c;
        } else {
            if (c != "1")
                out += c + "*";
            out += word_to_string(t.word, names);
        }
    }
    return out;
}

}  // namespace qalg
