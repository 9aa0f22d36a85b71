#include "qalg/grading.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qalg {

Word Grading::class_word(const Word& w) const
{
    Word out;
    for (Letter l : w) {
        if (fine) {
            out.push_back(letter_class[l]);
        } else {
            for (int i = 0; i < letter_weight[l]; ++i)
                out.push_back(0);
        }
    }
    return out;
}

int Grading::degree(const Word& cw) const
{
    int d = 0;
    for (Letter c : cw)
        d += class_weight[c];
    return d;
}

std::vector<Letter> Grading::letters_at(const Word& cw, std::size_t pos) const
{
    if (fine)
        return class_members[cw[pos]];
    std::vector<Letter> out;
    std::size_t rest = cw.size() - pos;
    for (std::size_t l = 0; l < letter_weight.size(); ++l)
        if (static_cast<std::size_t>(letter_weight[l]) <= rest)
            out.push_back(static_cast<Letter>(l));
    return out;
}

bool Grading::linked(const Word& cw) const
{
    for (std::size_t i = 1; i < cw.size(); ++i)
        if (!adjacent[cw[i - 1]][cw[i]])
            return false;
    return true;
}

namespace {

void extend_words(const Grading& g, int remaining, bool only_linked, Word& cur, std::vector<Word>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        if (g.class_weight[c] > remaining)
            continue;
        if (only_linked && !cur.empty() && !g.adjacent[cur.back()][c])
            continue;
        cur.push_back(static_cast<Letter>(c));
        extend_words(g, remaining - g.class_weight[c], only_linked, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> Grading::class_words_of_degree(int d) const
{
    std::vector<Word> out;
    Word cur;
    extend_words(*this, d, false, cur, out);
    return out;
}

std::vector<Word> Grading::linked_words_of_degree(int d) const
{
    std::vector<Word> out;
    Word cur;
    extend_words(*this, d, true, cur, out);
    return out;
}

std::string Grading::class_word_to_string(const Word& cw) const
{
    std::string s;
    for (std::size_t i = 0; i < cw.size(); ++i) {
        if (i)
            s += ' ';
        s += class_names[cw[i]];
    }
    return s.empty() ? "()" : s;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Grading coarse_grading(const Presentation& p)
{
    Grading g;
    g.fine = false;
    g.letter_class.assign(p.num_generators(), 0);
    g.letter_weight = p.weights();
    g.class_weight = {1};
    std::vector<Letter> all;
    for (std::size_t i = 0; i < p.num_generators(); ++i)
        all.push_back(static_cast<Letter>(i));
    g.class_members = {all};
    g.class_names = {"*"};
    g.adjacent = {{true}};
    return g;
}

Grading make_grading(const Presentation& p)
{
    std::size_t n = p.num_generators();
    UnionFind uf(n);
    for (const auto& r : p.relations) {
        if (!r.uniform_length())
            return coarse_grading(p);
        const Word& lead = r.leading_word();
        for (const auto& t : r.terms())
            for (std::size_t i = 0; i < lead.size(); ++i)
                uf.unite(lead[i], t.word[i]);
    }
    // classes numbered by their first member in generator order
    std::map<std::size_t, Letter> root_to_class;
    Grading g;
    g.fine = true;
    g.letter_weight = p.weights();
    g.letter_class.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = uf.find(i);
        auto it = root_to_class.find(root);
        if (it == root_to_class.end()) {
            Letter c = static_cast<Letter>(g.class_members.size());
            it = root_to_class.emplace(root, c).first;
            g.class_members.emplace_back();
            g.class_weight.push_back(p.generators[i].degree);
        }
        Letter c = it->second;
        if (g.class_weight[c] != p.generators[i].degree)
            return coarse_grading(p);
        g.letter_class[i] = c;
        g.class_members[c].push_back(static_cast<Letter>(i));
    }
    for (const auto& members : g.class_members) {
        std::string name = "{";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i)
                name += ',';
            name += p.generators[members[i]].name;
        }
        g.class_names.push_back(name + "}");
    }
    std::size_t k = g.class_members.size();
    g.adjacent.assign(k, std::vector<bool>(k, false));
    for (const auto& r : p.relations) {
        Word cw = g.class_word(r.leading_word());
        for (std::size_t i = 1; i < cw.size(); ++i)
            g.adjacent[cw[i - 1]][cw[i]] = true;
    }
    return g;
}

}  // namespace qalg
