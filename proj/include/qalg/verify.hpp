#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qalg/degreewise.hpp"
#include "qalg/gbasis.hpp"
#include "qalg/module.hpp"

namespace qalg {

struct ComplexCertificate {
    bool ok = true;
    std::size_t entries_checked = 0;
    int failed_map = 0;  // i when d_i d_{i-1} != 0
    std::size_t row = 0, col = 0;
    std::string normal_form;
    std::string block;
    std::string message;
};

// Checks that every composite d_i d_{i-1} (as right-multiplication matrices, D_i * D_{i-1})
// reduces to zero in A.
template <class K>
ComplexCertificate verify_complex(Algebra<K>& A, const ComplexSpec& c)
{
    ComplexCertificate cert;
    try {
        c.check_shapes();
    } catch (const std::invalid_argument& e) {
        cert.ok = false;
        cert.message = std::string("shape mismatch: ") + e.what();
        return cert;
    }
    const K& k = A.field();
    std::vector<SparseMatrix<K>> d;
    for (const auto& m : c.maps)
        d.push_back(to_sparse(A, m));
    for (std::size_t i = 2; i <= d.size(); ++i) {
        const auto& hi = d[i - 1];
        const auto& lo = d[i - 2];
        for (std::size_t r = 0; r < hi.num_rows(); ++r) {
            std::map<std::uint32_t, std::vector<typename NcPoly<K>::Term>> acc;
            for (const auto& [mid, e] : hi.rows[r])
                for (const auto& [col, f] : lo.rows[mid]) {
                    auto prod = multiply(k, e, f);
                    for (const auto& t : prod.terms())
                        acc[col].push_back(t);
                }
            for (auto& [col, terms] : acc) {
                ++cert.entries_checked;
                auto nf = A.normal_form(NcPoly<K>::from_terms(k, std::move(terms)));
                if (!nf.is_zero()) {
                    cert.ok = false;
                    cert.failed_map = static_cast<int>(i);
                    cert.row = r;
                    cert.col = col;
                    cert.normal_form = A.to_string(nf);
                    const Block* b = c.maps[i - 1].block_at(r, 0);
                    for (const auto& blk : c.maps[i - 1].blocks)
                        if (r >= blk.row && r < blk.row + blk.rows)
                            b = &blk;
                    cert.block = b ? b->name : "";
                    cert.message = "d_" + std::to_string(i) + " d_" + std::to_string(i - 1) + " has entry (" +
                                   std::to_string(r + 1) + "," + std::to_string(col + 1) + ") = " + cert.normal_form +
                                   (cert.block.empty() ? "" : " (row in block " + cert.block + ")");
                    return cert;
                }
            }
        }
    }
    return cert;
}

struct ExactnessFailure {
    int position = 0;
    int degree = 0;
    std::string multidegree;
    std::int64_t kernel_dim = 0;
    std::int64_t image_dim = 0;
};

struct ExactnessCertificate {
    bool exact = true;
    bool fine_grading = true;
    int jmax = 0;
    std::vector<int> positions;
    std::size_t multidegrees_checked = 0;
    std::optional<ExactnessFailure> failure;
    std::string message;
};

namespace detail {

// Degreewise ranks of the maps of a graded complex, with caching by (map, multidegree).
template <class K>
class ComplexRanks {
public:
    ComplexRanks(Algebra<K>& A, const GradedComplex<K>& c) : A_(A), c_(c) {}

    std::size_t dim(std::size_t module, const Word& sigma)
    {
        return make_component(A_, c_.tau[module], sigma).size();
    }
    // rank of d_i on the sigma component, i in 1..n
    std::size_t rank(std::size_t i, const Word& sigma)
    {
        auto key = std::make_pair(i, sigma);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        ComponentBasis src = make_component(A_, c_.tau[i], sigma);
        std::size_t r = 0;
        if (src.size()) {
            ComponentBasis tgt = make_component(A_, c_.tau[i - 1], sigma);
            RowEchelon<K> ech(A_.field(), tgt.size());
            for (std::size_t e = 0; e < src.size(); ++e)
                ech.insert(image_of(A_, c_.d[i - 1], src.elems[e].first, src.word(e), tgt));
            r = ech.rank();
        }
        cache_.emplace(key, r);
        return r;
    }

private:
    struct KeyLess {
        bool operator()(const std::pair<std::size_t, Word>& a, const std::pair<std::size_t, Word>& b) const
        {
            if (a.first != b.first)
                return a.first < b.first;
            return LexLess{}(a.second, b.second);
        }
    };
    Algebra<K>& A_;
    const GradedComplex<K>& c_;
    std::map<std::pair<std::size_t, Word>, std::size_t, KeyLess> cache_;
};

// Multidegrees that can carry homology at a position: rho tau_h with rho tau_h[0] free of breaks.
// Every other multidegree factors across a break as A_alpha (x) (complex at a shorter multidegree).
inline std::vector<Word> candidate_multidegrees(const Grading& g, const std::vector<const std::vector<Word>*>& taus,
                                                int offset, int jmax, bool exhaustive = false)
{
    std::set<Word, LexLess> out;
    std::map<int, std::vector<Word>> linked;
    for (const auto* t : taus)
        for (const Word& tau : *t) {
            int base = g.degree(tau) + offset;
            for (int e = 0; base + e <= jmax; ++e) {
                auto it = linked.find(e);
                if (it == linked.end())
                    it = linked.emplace(e, exhaustive ? g.class_words_of_degree(e) : g.linked_words_of_degree(e)).first;
                for (const Word& rho : it->second) {
                    if (!exhaustive && !rho.empty() && !tau.empty() && !g.adjacent[rho.back()][tau.front()])
                        continue;
                    if (rho.size() + tau.size() > Word::kCapacity)
                        continue;
                    out.insert(rho + tau);
                }
            }
        }
    return {out.begin(), out.end()};
}

}  // namespace detail

// Exactness of a graded complex at the given positions in internal degrees <= jmax. With
// `augmented`, M_0 = A maps onto k and position 0 means im d_1 = A_+.
template <class K>
ExactnessCertificate verify_exactness_graded(Algebra<K>& A, const GradedComplex<K>& c, int jmax,
                                             std::vector<int> positions, bool augmented, bool exhaustive = false)
{
    ExactnessCertificate cert;
    cert.jmax = jmax;
    cert.fine_grading = A.grading().fine;
    cert.positions = positions;
    A.gb().require_complete(jmax - c.offset);
    const Grading& g = A.grading();
    detail::ComplexRanks<K> ranks(A, c);
    int n = static_cast<int>(c.length());
    for (int i : positions) {
        std::vector<const std::vector<Word>*> taus;
        for (int m = i - 1; m <= i + 1; ++m)
            if (m >= 0 && m <= n)
                taus.push_back(&c.tau[m]);
        for (const Word& sigma : detail::candidate_multidegrees(g, taus, c.offset, jmax, exhaustive)) {
            ++cert.multidegrees_checked;
            std::int64_t dim = static_cast<std::int64_t>(ranks.dim(i, sigma));
            std::int64_t out_rank = 0;
            if (i >= 1)
                out_rank = static_cast<std::int64_t>(ranks.rank(i, sigma));
            else if (augmented && sigma.empty())
                out_rank = std::min<std::int64_t>(dim, 1);
            std::int64_t ker = dim - out_rank;
            std::int64_t im = i < n ? static_cast<std::int64_t>(ranks.rank(i + 1, sigma)) : 0;
            if (ker != im) {
                cert.exact = false;
                cert.failure = ExactnessFailure{i, g.degree(sigma) + c.offset, g.class_word_to_string(sigma), ker, im};
                cert.message = "homology at position " + std::to_string(i) + " in degree " +
                               std::to_string(cert.failure->degree) + " (multidegree " + cert.failure->multidegree +
                               "): kernel " + std::to_string(ker) + ", image " + std::to_string(im);
                return cert;
            }
        }
    }
    return cert;
}

// Builds the multigraded view of a complex, falling back to the single-degree grading when the
// entries are not homogeneous for the class grading. The returned algebra view must outlive use.
template <class K>
struct GradedView {
    std::unique_ptr<Algebra<K>> coarse;  // set when the fallback was used
    Algebra<K>* algebra = nullptr;
    GradedComplex<K> complex;
};

template <class K>
GradedView<K> graded_view(Algebra<K>& A, const ComplexSpec& c, bool augmented)
{
    GradedView<K> v;
    auto md = A.grading().fine ? infer_multidegrees(A, c, augmented) : std::nullopt;
    if (md) {
        v.algebra = &A;
    } else {
        v.coarse = A.with_grading(coarse_grading(A.presentation()));
        v.algebra = v.coarse.get();
        md = coarse_multidegrees(c, augmented);
    }
    v.complex = make_graded_complex(*v.algebra, c, *md);
    return v;
}

// Exactness of a complex given as data. `exhaustive` checks every multidegree rather than only
// those without a break in front of a generator. For an augmented complex (a resolution of k) all positions
// 0..n are checked, otherwise only the interior positions 1..n-1 unless listed explicitly.
template <class K>
ExactnessCertificate verify_exactness(Algebra<K>& A, const ComplexSpec& c, int jmax, bool augmented = true,
                                      std::vector<int> positions = {}, bool exhaustive = false)
{
    c.check_shapes();
    if (positions.empty()) {
        int n = static_cast<int>(c.length());
        for (int i = augmented ? 0 : 1; i <= (augmented ? n : n - 1); ++i)
            positions.push_back(i);
    }
    auto view = graded_view(A, c, augmented);
    try {
        return verify_exactness_graded(*view.algebra, view.complex, jmax, positions, augmented, exhaustive);
    } catch (const GradingMismatch&) {
        // inferred multidegrees are inconsistent with reduction; retry in the single grading
        auto coarse = A.with_grading(coarse_grading(A.presentation()));
        auto gc = make_graded_complex(*coarse, c, coarse_multidegrees(c, augmented));
        auto cert = verify_exactness_graded(*coarse, gc, jmax, positions, augmented, exhaustive);
        cert.fine_grading = false;
        return cert;
    }
}

inline bool verify_minimality(const ComplexSpec& c) { return is_minimal(c); }
inline bool verify_minimality(const std::vector<MatrixSpec>& maps)
{
    ComplexSpec c;
    c.maps = maps;
    return is_minimal(c);
}

// Basis of {v in (source)_j : v * M = 0}. Generator degrees of the source are source_shifts,
// of the target target_shifts. Each vector lists one element of A per source generator.
template <class K>
std::vector<std::vector<NcPoly<K>>> graded_kernel(Algebra<K>& A, const MatrixSpec& m, const std::vector<int>& source_shifts,
                                                  const std::vector<int>& target_shifts, int j)
{
    ComplexSpec c;
    c.shifts = {target_shifts, source_shifts};
    c.maps = {m};
    c.check_shapes();
    if (auto bad = check_entry_degrees(A.presentation(), c))
        throw std::invalid_argument(*bad);
    auto view = graded_view(A, c, false);
    Algebra<K>& B = *view.algebra;
    const Grading& g = B.grading();
    const auto& gc = view.complex;
    std::set<Word, LexLess> sigmas;
    for (const Word& tau : gc.tau[1]) {
        int e = j - gc.offset - g.degree(tau);
        if (e < 0)
            continue;
        for (const Word& rho : g.class_words_of_degree(e))
            sigmas.insert(rho + tau);
    }
    B.gb().require_complete(j - gc.offset);
    std::vector<std::vector<NcPoly<K>>> out;
    for (const Word& sigma : sigmas) {
        ComponentBasis src = make_component(B, gc.tau[1], sigma);
        if (!src.size())
            continue;
        ComponentBasis tgt = make_component(B, gc.tau[0], sigma);
        std::vector<SparseVec<K>> rows;
        for (std::size_t e = 0; e < src.size(); ++e)
            rows.push_back(image_of(B, gc.d[0], src.elems[e].first, src.word(e), tgt));
        for (const auto& v : kernel_basis(B.field(), tgt.size(), rows)) {
            std::vector<NcPoly<K>> vec(m.rows);
            for (auto& [h, p] : vector_to_row(B.field(), src, v))
                vec[h] = std::move(p);
            out.push_back(std::move(vec));
        }
    }
    return out;
}

struct AnnihilatorResult {
    std::string name;
    bool informational = false;
    bool generators_annihilate = true;  // rows of the generator matrix kill the target
    bool equal = true;                  // and generate the whole annihilator up to jmax
    std::string message;
};

// Generator degrees for a one-step annihilator statement: the target acts from source degree 0.
ComplexSpec annihilator_complex(const Presentation& p, const MatrixSpec& target, const MatrixSpec& generators);

template <class K>
AnnihilatorResult check_annihilator(Algebra<K>& A, const std::string& name, const MatrixSpec& target,
                                    const MatrixSpec& generators, int jmax)
{
    AnnihilatorResult r;
    r.name = name;
    ComplexSpec c = annihilator_complex(A.presentation(), target, generators);
    auto cc = verify_complex(A, c);
    if (!cc.ok) {
        r.generators_annihilate = false;
        r.equal = false;
        r.message = "a generator does not annihilate: " + cc.message;
        return r;
    }
    auto ex = verify_exactness(A, c, jmax, false, {1});
    r.equal = ex.exact;
    if (!ex.exact)
        r.message = ex.message;
    return r;
}

}  // namespace qalg
