#include "qalg/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qalg/gbasis.hpp"
#include "qalg/koszulity.hpp"
#include "qalg/series.hpp"
#include "qalg/verify.hpp"
#include "qalg/yoneda.hpp"

namespace qalg {

using nlohmann::json;

namespace {

template <class Fn>
json with_field(const FieldSpec& f, Fn&& fn)
{
    if (f.kind == FieldSpec::Kind::Prime)
        return fn(PrimeField(f.prime));
    return fn(RationalField{});
}

json meta(const Presentation& p, json bounds)
{
    return {{"version", kVersion},
            {"order", kOrder},
            {"field", p.field.to_string()},
            {"sign_convention", kSignConvention},
            {"bounds", std::move(bounds)}};
}

int max_relation_degree(const Presentation& p)
{
    int d = 0;
    for (const auto& r : p.relations)
        d = std::max(d, p.degree(r.leading_word()));
    return d;
}

void check_bounds(int imax, int jmax)
{
    if (imax < 1 || jmax < imax)
        throw std::invalid_argument("bounds must satisfy 1 <= imax <= jmax");
    if (jmax > static_cast<int>(Word::kCapacity))
        throw std::invalid_argument("jmax exceeds the word length cap " + std::to_string(Word::kCapacity));
}

std::string join_bidegrees(const std::vector<std::pair<int, int>>& v)
{
    std::string s;
    for (const auto& [i, j] : v) {
        if (!s.empty())
            s += ", ";
        s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return s;
}

json claim(const std::string& name, bool pass, const std::string& detail = "", bool informational = false)
{
    json c = {{"claim", name}, {"pass", pass}};
    if (!detail.empty())
        c["detail"] = detail;
    if (informational)
        c["informational"] = true;
    return c;
}

json koszulity_json(const KoszulityReport& k)
{
    json off = json::array();
    for (const auto& c : k.off_diagonal)
        off.push_back({{"i", c.i}, {"j", c.j}, {"b", c.value}});
    json delta = json::object();
    for (const auto& [n, i] : k.delta)
        delta[std::to_string(n)] = i;
    return {{"bound", k.bound},
            {"max_m_koszul", k.max_m_koszul},
            {"off_diagonal", off},
            {"delta", delta},
            {"delta_conflicts", k.delta_conflicts},
            {"delta_fits", k.delta_fits},
            {"global_dimension_lower", k.global_dimension_lower},
            {"top_row_empty", k.top_row_empty},
            {"not_koszul", k.not_koszul},
            {"verdict", k.verdict}};
}

json poincare_json(const PoincareCheck& c)
{
    return {{"holds", c.holds}, {"through", c.through}, {"product", c.product.coefficients()}};
}

template <class K>
json exactness_json(const ExactnessCertificate& e)
{
    json j = {{"exact", e.exact},
              {"jmax", e.jmax},
              {"positions", e.positions},
              {"multigraded", e.fine_grading},
              {"multidegrees_checked", e.multidegrees_checked}};
    if (e.failure)
        j["failure"] = {{"position", e.failure->position},
                        {"degree", e.failure->degree},
                        {"multidegree", e.failure->multidegree},
                        {"kernel_dim", e.failure->kernel_dim},
                        {"image_dim", e.failure->image_dim},
                        {"message", e.message}};
    return j;
}

json composite_json(const ComplexCertificate& c)
{
    json j = {{"zero", c.ok}, {"entries_checked", c.entries_checked}};
    if (!c.ok) {
        j["failure"] = {{"map", c.failed_map}, {"message", c.message}};
        if (c.failed_map) {
            j["failure"]["row"] = c.row + 1;
            j["failure"]["col"] = c.col + 1;
            j["failure"]["normal_form"] = c.normal_form;
            j["failure"]["block"] = c.block;
        }
    }
    return j;
}

int gb_degree_for(const ComplexSpec& c, int jmax)
{
    int lo = 0, hi = 0;
    for (const auto& s : c.shifts)
        for (int x : s) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    return std::max(jmax - lo, hi - lo);
}

template <class K>
json verify_impl(Algebra<K>& A, const ComplexSpec& c, int jmax, bool augmented)
{
    json j;
    bool pass = true;
    auto deg = check_entry_degrees(A.presentation(), c);
    j["entry_degrees"] = {{"ok", !deg}};
    if (deg) {
        j["entry_degrees"]["message"] = *deg;
        pass = false;
    }
    auto comp = verify_complex(A, c);
    j["composite"] = composite_json(comp);
    pass = pass && comp.ok;
    if (comp.ok && !deg) {
        auto ex = verify_exactness(A, c, jmax, augmented);
        j["exactness"] = exactness_json<K>(ex);
        pass = pass && ex.exact;
    } else {
        j["exactness"] = {{"skipped", "requires a complex with homogeneous entries"}};
    }
    auto constant = first_constant_entry(c);
    j["minimal"] = {{"minimal", !constant}};
    if (constant) {
        j["minimal"]["message"] = *constant;
        pass = false;
    }
    j["pass"] = pass;
    return j;
}

BettiTable expected_table(const std::vector<int>& ranks, const std::vector<int>& shifts, int imax, int jmax)
{
    BettiTable t(imax, jmax);
    for (std::size_t i = 0; i < ranks.size() && static_cast<int>(i) <= imax; ++i)
        if (shifts[i] <= jmax)
            t.b[i][shifts[i]] = ranks[i];
    return t;
}

std::string table_diff(const BettiTable& got, const BettiTable& want)
{
    for (int i = 0; i <= got.imax; ++i)
        for (int j = 0; j <= got.jmax; ++j)
            if (got.at(i, j) != want.at(i, j))
                return "b(" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(got.at(i, j)) +
                       ", expected " + std::to_string(want.at(i, j));
    return "";
}

std::vector<std::pair<int, int>> fresh_bidegrees(const GenerationProfile& g)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= g.fresh.imax; ++i)
        for (int j = 0; j <= g.fresh.jmax; ++j)
            if (g.fresh.at(i, j) > 0)
                out.emplace_back(i, j);
    return out;
}

template <class K>
json check_C(const K& k, const Presentation& p, int m)
{
    int I = m + 1, J = m + 3;
    json claims = json::array();
    auto push = [&](json c) { claims.push_back(std::move(c)); };

    push(claim("C(" + std::to_string(m) + ") has " + std::to_string(3 * m) + " generators and " +
                   std::to_string(4 + 3 * m) + " relations",
               p.num_generators() == static_cast<std::size_t>(3 * m) &&
                   p.relations.size() == static_cast<std::size_t>(4 + 3 * m),
               std::to_string(p.num_generators()) + " generators, " + std::to_string(p.relations.size()) +
                   " relations"));
    {
        auto layers = c_layers(m);
        std::vector<int> layer_of(p.num_generators(), -1);
        for (std::size_t L = 0; L < layers.size(); ++L)
            for (const auto& name : layers[L])
                layer_of[p.index_of(name)] = static_cast<int>(L);
        std::string bad;
        for (const auto& r : p.relations) {
            int layer = -1;
            for (const auto& t : r.terms()) {
                bool ok = t.word.size() == 2 && layer_of[t.word[1]] == layer_of[t.word[0]] + 1 &&
                          (layer < 0 || layer == layer_of[t.word[0]]);
                layer = layer_of[t.word[0]];
                if (!ok && bad.empty())
                    bad = relation_to_string(p, r);
            }
        }
        push(claim("every relation is a sum of S_i S_(i+1) products for a single i", bad.empty(),
                   bad.empty() ? "" : "offending relation " + bad));
    }

    Algebra<K> A(p, k, GbOptions{J});
    push(claim("Groebner basis complete through degree " + std::to_string(J), A.gb().complete_at(J),
               std::to_string(A.gb().elements().size()) + " elements" +
                   (A.gb().finite_complete() ? ", finite" : "")));

    auto res = minimal_resolution(A, {I, J, false});
    BettiTable b = res.betti(A.grading());
    auto ranks = c_complex_ranks(m);
    auto shifts = c_complex_shifts(m);
    {
        std::string bad;
        for (int i = 1; i <= m - 1; ++i)
            if (b.at(i, i) != ranks[i] && bad.empty())
                bad = "b(" + std::to_string(i) + "," + std::to_string(i) + ") = " + std::to_string(b.at(i, i)) +
                      ", rank P^" + std::to_string(i) + " = " + std::to_string(ranks[i]);
        push(claim("b(i,i) = rank P^i for 1 <= i <= m-1", bad.empty(), bad));
    }
    push(claim("b(" + std::to_string(m) + "," + std::to_string(m + 1) + ") = 1", b.at(m, m + 1) == 1,
               "b(" + std::to_string(m) + "," + std::to_string(m + 1) + ") = " + std::to_string(b.at(m, m + 1))));
    auto kz = koszulity_report(b);
    push(claim(std::to_string(m) + "-Koszul: b(i,j) = 0 for all i < j <= " + std::to_string(m), kz.max_m_koszul >= m,
               kz.verdict));
    push(claim("not Koszul", kz.not_koszul, kz.verdict));
    push(claim("row " + std::to_string(m + 1) + " empty through degree " + std::to_string(J) + " (global dimension " +
                   std::to_string(m) + ")",
               b.row_total(m + 1) == 0));
    {
        auto diff = table_diff(b, expected_table(ranks, shifts, I, J));
        push(claim("Betti table equals the ranks and shifts of P", diff.empty(), diff));
    }

    ComplexSpec P = build_C_complex(p, m);
    auto comp = verify_complex(A, P);
    push(claim("lambda_i lambda_(i-1) = 0", comp.ok, comp.message));
    auto ex = verify_exactness(A, P, J);
    push(claim("P is exact through degree " + std::to_string(J), ex.exact, ex.message));
    push(claim("P is minimal", verify_minimality(P), first_constant_entry(P).value_or("")));

    for (const auto& cl : annihilator_claims(p, m)) {
        auto r = check_annihilator(A, cl.name, cl.target, cl.generators, J);
        push(claim(cl.name + " through degree " + std::to_string(J), r.generators_annihilate && r.equal, r.message,
                   cl.informational));
    }

    auto hil = count_normal_words(A.gb().automaton(), A.gb().weights(), J);
    auto pc = poincare_hilbert_identity(b, PowerSeries(hil));
    push(claim("P(-1,g) H(g) = 1 through degree " + std::to_string(pc.through), pc.holds,
               "product " + pc.product.to_string()));

    auto prof = generation_profile(A, res);
    auto fresh = fresh_bidegrees(prof);
    std::vector<std::pair<int, int>> want{{1, 1}, {m, m + 1}};
    push(claim("Ext generated in bidegrees (1,1) and (" + std::to_string(m) + "," + std::to_string(m + 1) + ")",
               fresh == want && prof.fresh.at(1, 1) == b.at(1, 1) && prof.fresh.at(m, m + 1) == 1,
               "new generators at " + join_bidegrees(fresh)));
    {
        bool ok = true;
        for (int i = 2; i <= m - 1; ++i)
            ok = ok && prof.diagonal_spanned[i];
        push(claim("Ext^(i,i) = Ext^(1,1) Ext^(i-1,i-1) for 2 <= i <= m-1", ok));
    }
    {
        // span of S3 S4 products sv, sx1, tv, tw, uv, uw in degree 2
        std::vector<NcPoly<K>> elems;
        for (const char* w : {"s*v", "s*x1", "t*v", "t*w", "u*v", "u*w"})
            elems.push_back(A.normal_form(A.convert(parse_expression(p, w))));
        std::set<Word, LexLess> words;
        for (const auto& e : elems)
            for (const auto& t : e.terms())
                words.insert(t.word);
        std::vector<Word> index(words.begin(), words.end());
        std::vector<SparseVec<K>> rows;
        for (const auto& e : elems) {
            SparseVec<K> v;
            for (const auto& t : e.terms())
                v.emplace_back(static_cast<std::uint32_t>(
                                   std::lower_bound(index.begin(), index.end(), t.word, LexLess{}) - index.begin()),
                               t.coeff);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(v));
        }
        auto r = rank_of(k, index.size(), rows);
        push(claim("span{sv, sx1, tv, tw, uv, uw} in degree 2 has dimension 6", r == 6,
                   "dimension " + std::to_string(r), true));
    }

    json out = {{"algebra", "C(" + std::to_string(m) + ")"},
                {"bounds", {{"imax", I}, {"jmax", J}, {"maxdeg", J}}},
                {"betti", betti_json(b)},
                {"koszulity", koszulity_json(kz)},
                {"claims", claims}};
    return out;
}

template <class K>
json check_B(const K& k, const Presentation& p, BVariant v)
{
    int I = 5, J = 8;
    json claims = json::array();
    auto push = [&](json c) { claims.push_back(std::move(c)); };
    push(claim("B has 13 generators and 14 relations (rank R^2)",
               p.num_generators() == 13 && p.relations.size() == 14,
               std::to_string(p.num_generators()) + " generators, " + std::to_string(p.relations.size()) +
                   " relations"));
    Algebra<K> A(p, k, GbOptions{J});
    auto hil = count_normal_words(A.gb().automaton(), A.gb().weights(), J);
    PowerSeries expect = invert_series(PowerSeries({1, -13, 14, -7, 0, 1}), J);
    push(claim("Hilbert series equals (1-13g+14g^2-7g^3+g^5)^-1 through degree 8", PowerSeries(hil) == expect,
               "computed " + PowerSeries(hil).to_string()));
    auto res = minimal_resolution(A, {I, J, false});
    BettiTable b = res.betti(A.grading());
    {
        auto diff = table_diff(b, expected_table({1, 13, 14, 7, 1}, {0, 1, 2, 3, 5}, I, J));
        push(claim("Betti table equals the ranks and shifts of R", diff.empty(), diff));
    }
    ComplexSpec R = build_B_complex(p);
    auto comp = verify_complex(A, R);
    push(claim("psi_i psi_(i-1) = 0", comp.ok, comp.message));
    if (comp.ok) {
        auto ex = verify_exactness(A, R, J);
        push(claim("R is exact through degree 8", ex.exact, ex.message));
    } else {
        push(claim("R is exact through degree 8", false, "not a complex"));
    }
    push(claim("R is minimal", verify_minimality(R), first_constant_entry(R).value_or("")));
    auto pc = poincare_hilbert_identity(b, PowerSeries(hil));
    push(claim("P(-1,g) H(g) = 1 through degree " + std::to_string(pc.through), pc.holds,
               "product " + pc.product.to_string()));
    auto prof = generation_profile(A, res);
    push(claim("Ext generator bidegrees", true, "new generators at " + join_bidegrees(fresh_bidegrees(prof)),
               true));
    auto kz = koszulity_report(b);
    return {{"algebra", v == BVariant::Full ? "B" : "B11"},
            {"bounds", {{"imax", I}, {"jmax", J}, {"maxdeg", J}}},
            {"betti", betti_json(b)},
            {"koszulity", koszulity_json(kz)},
            {"claims", claims}};
}

std::string pad(const std::string& s, std::size_t w)
{
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string meta_text(const json& r)
{
    const auto& m = r["meta"];
    std::string s = "# qalg " + m["version"].get<std::string>() + ", field " + m["field"].get<std::string>() +
                    ", order " + m["order"].get<std::string>() + "\n# bounds " + m["bounds"].dump() + "\n";
    return s;
}

std::string claims_text(const json& claims)
{
    std::string s;
    for (const auto& c : claims) {
        std::string status = c["pass"].get<bool>() ? "PASS" : "FAIL";
        if (c.value("informational", false))
            status = c["pass"].get<bool>() ? "info" : "INFO";
        s += "  " + status + "  " + c["claim"].get<std::string>();
        if (c.contains("detail"))
            s += "  [" + c["detail"].get<std::string>() + "]";
        s += "\n";
    }
    return s;
}

}  // namespace

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::Json;
    if (s == "text")
        return Format::Text;
    if (s == "csv")
        return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "' (json, text, csv)");
}

json betti_json(const BettiTable& b)
{
    return {{"imax", b.imax}, {"jmax", b.jmax}, {"table", b.b}};
}

BettiTable betti_from_json(const json& j)
{
    BettiTable b(j.at("imax").get<int>(), j.at("jmax").get<int>());
    b.b = j.at("table").get<std::vector<std::vector<std::int64_t>>>();
    return b;
}

std::string betti_text(const BettiTable& b)
{
    std::size_t w = 2;
    for (int i = 0; i <= b.imax; ++i)
        for (int j = 0; j <= b.jmax; ++j)
            w = std::max(w, std::to_string(b.at(i, j)).size() + 1);
    w = std::max(w, std::to_string(b.jmax).size() + 1);
    std::string s = pad("i\\j", 4);
    for (int j = 0; j <= b.jmax; ++j)
        s += pad(std::to_string(j), w);
    s += "\n";
    for (int i = 0; i <= b.imax; ++i) {
        s += pad(std::to_string(i) + ":", 4);
        for (int j = 0; j <= b.jmax; ++j)
            s += pad(b.at(i, j) ? std::to_string(b.at(i, j)) : ".", w);
        s += "\n";
    }
    return s;
}

json gb_report(const Presentation& p, int maxdeg)
{
    if (maxdeg < max_relation_degree(p))
        throw std::invalid_argument("maxdeg " + std::to_string(maxdeg) + " is below the relation degree " +
                                    std::to_string(max_relation_degree(p)));
    return with_field(p.field, [&](auto k) {
        using K = decltype(k);
        Algebra<K> A(p, k, GbOptions{maxdeg});
        const auto& gb = A.gb();
        json elems = json::array();
        for (const auto& e : gb.elements())
            elems.push_back({{"element", A.to_string(e)},
                             {"leading_word", word_to_string(e.leading_word(), A.names())},
                             {"degree", gb.degree_of(e.leading_word())}});
        json complete = json::array();
        for (int d = 0; d <= maxdeg; ++d)
            complete.push_back(gb.complete_at(d));
        return json{{"kind", "gb"},
                    {"meta", meta(p, {{"maxdeg", maxdeg}})},
                    {"count", gb.elements().size()},
                    {"elements", elems},
                    {"complete_by_degree", complete},
                    {"finite_complete", gb.finite_complete()},
                    {"skipped_overlaps", gb.skipped_overlaps()},
                    {"dims", count_normal_words(gb.automaton(), gb.weights(), maxdeg)}};
    });
}

std::string gb_basis_text(const Presentation& p, int maxdeg)
{
    json r = gb_report(p, maxdeg);
    std::string s = "# Groebner basis, " + std::string(kOrder) + ", complete " +
                    (r["finite_complete"].get<bool>() ? std::string("in every degree")
                                                      : "through degree " + std::to_string(maxdeg)) +
                    "\n";
    s += "field " + p.field.to_string() + "\n";
    s += "gens";
    for (const auto& g : p.generators)
        s += " " + g.name;
    s += "\n";
    bool uniform = std::all_of(p.generators.begin(), p.generators.end(), [](const auto& g) { return g.degree == 1; });
    if (!uniform)
        for (const auto& g : p.generators)
            s += "deg " + g.name + " " + std::to_string(g.degree) + "\n";
    for (const auto& e : r["elements"])
        s += "rel " + e["element"].get<std::string>() + ";\n";
    return s;
}

json hilbert_report(const Presentation& p, int maxdeg)
{
    if (maxdeg < 0)
        throw std::invalid_argument("maxdeg must be nonnegative");
    int gbdeg = std::max(maxdeg, max_relation_degree(p));
    return with_field(p.field, [&](auto k) {
        using K = decltype(k);
        Algebra<K> A(p, k, GbOptions{gbdeg});
        auto dims = count_normal_words(A.gb().automaton(), A.gb().weights(), maxdeg);
        return json{{"kind", "hilbert"},
                    {"meta", meta(p, {{"maxdeg", maxdeg}})},
                    {"dims", dims},
                    {"series", PowerSeries(dims).to_string()}};
    });
}

json resolve_report(const Presentation& p, int imax, int jmax)
{
    check_bounds(imax, jmax);
    return with_field(p.field, [&](auto k) {
        using K = decltype(k);
        Algebra<K> A(p, k, GbOptions{std::max(jmax, max_relation_degree(p))});
        auto res = minimal_resolution(A, {imax, jmax, false});
        BettiTable b = res.betti(A.grading());
        auto hil = count_normal_words(A.gb().automaton(), A.gb().weights(), jmax);
        auto pc = poincare_hilbert_identity(b, PowerSeries(hil));
        return json{{"kind", "betti"},
                    {"meta", meta(p, {{"imax", imax}, {"jmax", jmax}, {"maxdeg", jmax}})},
                    {"betti", betti_json(b)},
                    {"complete_within_bounds", true},
                    {"multigraded", A.grading().fine},
                    {"koszulity", koszulity_json(koszulity_report(b))},
                    {"hilbert", hil},
                    {"poincare", poincare_json(pc)}};
    });
}

json verify_report(const Presentation& p, const ComplexSpec& c, int jmax, bool augmented)
{
    c.check_shapes();
    return with_field(p.field, [&](auto k) {
        using K = decltype(k);
        Algebra<K> A(p, k, GbOptions{std::max(gb_degree_for(c, jmax), max_relation_degree(p))});
        json j = verify_impl(A, c, jmax, augmented);
        j["kind"] = "verify";
        j["complex"] = c.name;
        j["augmented"] = augmented;
        j["meta"] = meta(p, {{"jmax", jmax}});
        return j;
    });
}

json ext_gens_report(const Presentation& p, int imax, int jmax)
{
    check_bounds(imax, jmax);
    return with_field(p.field, [&](auto k) {
        using K = decltype(k);
        Algebra<K> A(p, k, GbOptions{std::max(jmax, max_relation_degree(p))});
        auto res = minimal_resolution(A, {imax, jmax, false});
        auto prof = generation_profile(A, res);
        auto fresh = fresh_bidegrees(prof);
        json gens = json::array();
        for (const auto& [i, j] : fresh)
            gens.push_back({{"i", i}, {"j", j}, {"count", prof.fresh.at(i, j)}});
        json diag = json::object();
        for (int i = 2; i <= imax && i <= jmax; ++i)
            diag[std::to_string(i)] = static_cast<bool>(prof.diagonal_spanned[i]);
        return json{{"kind", "ext-gens"},
                    {"meta", meta(p, {{"imax", imax}, {"jmax", jmax}})},
                    {"betti", betti_json(prof.betti)},
                    {"decomposable", betti_json(prof.decomposable)},
                    {"new_generators", gens},
                    {"diagonal_spanned_by_degree_one", diag},
                    {"unknown", "bidegrees with i > " + std::to_string(imax) + " or j > " + std::to_string(jmax)},
                    {"summary", "generated in bidegrees " + join_bidegrees(fresh) + " within bounds"}};
    });
}

json paper_check_report(const PaperCheckOptions& o)
{
    for (int m : o.ms)
        if (m < 5)
            throw std::invalid_argument("paper-check needs m >= 5; the construction of C(m) starts at m = 5 and the "
                                        "m = 4 analogue is the algebra B, which is always included");
    json algebras = json::array();
    bool pass = true;
    std::vector<int> ms = o.ms;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    auto run = [&](auto k) {
        using K = decltype(k);
        for (int m : ms) {
            Presentation p = build_C(m);
            p.field = o.field;
            algebras.push_back(check_C<K>(k, p, m));
        }
        Presentation b = build_B(o.b_variant);
        b.field = o.field;
        algebras.push_back(check_B<K>(k, b, o.b_variant));
        return json();
    };
    with_field(o.field, run);
    std::size_t failed = 0;
    for (const auto& a : algebras)
        for (const auto& c : a["claims"])
            if (!c["pass"].get<bool>() && !c.value("informational", false)) {
                pass = false;
                ++failed;
            }
    Presentation dummy;
    dummy.field = o.field;
    return {{"kind", "paper-check"},
            {"meta", meta(dummy, {{"m", ms}})},
            {"algebras", algebras},
            {"failed_claims", failed},
            {"pass", pass}};
}

bool report_passes(const json& r)
{
    return !r.contains("pass") || r["pass"].get<bool>();
}

std::string render(const json& r, Format f)
{
    if (f == Format::Json)
        return r.dump(2) + "\n";
    std::string kind = r.value("kind", "");
    std::ostringstream s;
    if (f == Format::Text) {
        s << meta_text(r);
        if (kind == "gb") {
            s << "Groebner basis: " << r["count"] << " elements"
              << (r["finite_complete"].get<bool>() ? " (complete in every degree)" : "") << "\n";
            for (const auto& e : r["elements"])
                s << "  " << e["leading_word"].get<std::string>() << "  <-  " << e["element"].get<std::string>() << "\n";
            s << "dims:";
            for (const auto& d : r["dims"])
                s << " " << d;
            s << "\n";
        } else if (kind == "hilbert") {
            s << "H(g) = " << r["series"].get<std::string>() << "\n";
            int d = 0;
            for (const auto& x : r["dims"])
                s << "  dim A_" << d++ << " = " << x << "\n";
        } else if (kind == "betti") {
            s << betti_text(betti_from_json(r["betti"]));
            s << "koszulity: " << r["koszulity"]["verdict"].get<std::string>() << "\n";
            s << "P(-1,g) H(g) = 1 through degree " << r["poincare"]["through"] << ": "
              << (r["poincare"]["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
        } else if (kind == "verify") {
            s << "complex " << r["complex"].get<std::string>() << "\n";
            auto line = [&](const char* what, bool ok, const json& detail) {
                s << "  " << (ok ? "PASS" : "FAIL") << "  " << what;
                if (!ok && detail.contains("message"))
                    s << "  [" << detail["message"].get<std::string>() << "]";
                s << "\n";
            };
            line("entry degrees match shifts", r["entry_degrees"]["ok"].get<bool>(), r["entry_degrees"]);
            const auto& comp = r["composite"];
            line("composites vanish", comp["zero"].get<bool>(), comp.contains("failure") ? comp["failure"] : json());
            const auto& ex = r["exactness"];
            if (ex.contains("exact"))
                line("exact", ex["exact"].get<bool>(), ex.contains("failure") ? ex["failure"] : json());
            else
                s << "  skip  exact  [" << ex["skipped"].get<std::string>() << "]\n";
            line("minimal", r["minimal"]["minimal"].get<bool>(), r["minimal"]);
        } else if (kind == "ext-gens") {
            s << "Betti table\n" << betti_text(betti_from_json(r["betti"]));
            s << "products span\n" << betti_text(betti_from_json(r["decomposable"]));
            s << r["summary"].get<std::string>() << "\n";
            s << "sign convention: " << r["meta"]["sign_convention"].get<std::string>() << "\n";
        } else if (kind == "paper-check") {
            for (const auto& a : r["algebras"]) {
                s << a["algebra"].get<std::string>() << "  bounds " << a["bounds"].dump() << "\n";
                s << betti_text(betti_from_json(a["betti"]));
                s << claims_text(a["claims"]);
            }
            s << (r["pass"].get<bool>() ? "all claims pass" : std::to_string(r["failed_claims"].get<int>()) + " claim(s) failed")
              << "\n";
        } else {
            s << r.dump(2) << "\n";
        }
        return s.str();
    }
    // csv
    if (kind == "gb") {
        s << "index,degree,leading_word,element\n";
        int i = 0;
        for (const auto& e : r["elements"])
            s << i++ << "," << e["degree"] << "," << csv_field(e["leading_word"]) << "," << csv_field(e["element"]) << "\n";
    } else if (kind == "hilbert") {
        s << "degree,dim\n";
        int d = 0;
        for (const auto& x : r["dims"])
            s << d++ << "," << x << "\n";
    } else if (kind == "betti") {
        s << "i,j,b\n";
        BettiTable b = betti_from_json(r["betti"]);
        for (int i = 0; i <= b.imax; ++i)
            for (int j = 0; j <= b.jmax; ++j)
                s << i << "," << j << "," << b.at(i, j) << "\n";
    } else if (kind == "verify") {
        s << "check,pass\n";
        s << "entry_degrees," << r["entry_degrees"]["ok"] << "\n";
        s << "composite," << r["composite"]["zero"] << "\n";
        s << "exact," << r["exactness"].value("exact", false) << "\n";
        s << "minimal," << r["minimal"]["minimal"] << "\n";
    } else if (kind == "ext-gens") {
        s << "i,j,b,decomposable,new\n";
        BettiTable b = betti_from_json(r["betti"]), d = betti_from_json(r["decomposable"]);
        for (int i = 0; i <= b.imax; ++i)
            for (int j = 0; j <= b.jmax; ++j)
                s << i << "," << j << "," << b.at(i, j) << "," << d.at(i, j) << ","
                  << (i == 0 ? 0 : b.at(i, j) - d.at(i, j)) << "\n";
    } else if (kind == "paper-check") {
        s << "algebra,claim,pass,informational,detail\n";
        for (const auto& a : r["algebras"])
            for (const auto& c : a["claims"])
                s << csv_field(a["algebra"]) << "," << csv_field(c["claim"]) << "," << c["pass"] << ","
                  << c.value("informational", false) << "," << csv_field(c.value("detail", "")) << "\n";
    } else {
        throw std::invalid_argument("no csv rendering for this report");
    }
    return s.str();
}

}  // namespace qalg
