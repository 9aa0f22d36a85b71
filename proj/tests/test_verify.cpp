#include <doctest.h>

#include "kernel_oracle.hpp"
#include "mutations.hpp"
#include "oracles.hpp"
#include "qalg/constructions.hpp"
#include "qalg/verify.hpp"
#include "support.hpp"

using namespace qalg;

namespace {

using K = PrimeField;

MatrixSpec one_by_one(const Presentation& p, const std::string& expr)
{
    MatrixSpec m(1, 1);
    if (expr != "0")
        m.at(0, 0) = parse_expression(p, expr);
    return m;
}

}  // namespace

TEST_SUITE("verify")
{
    TEST_CASE("the built-in complexes pass every check")
    {
        K k;
        for (int m : {5, 6, 7}) {
            auto p = build_C(m);
            auto c = build_C_complex(p, m);
            Algebra<K> A(p, k, GbOptions{m + 3});
            CHECK(verify_complex(A, c).ok);
            auto ex = verify_exactness(A, c, m + 3);
            CHECK(ex.exact);
            CHECK(ex.fine_grading);
            CHECK(verify_minimality(c));
            CHECK_FALSE(check_entry_degrees(p, c).has_value());
        }
        auto b = build_B();
        auto r = build_B_complex(b);
        Algebra<K> A(b, k, GbOptions{8});
        CHECK(verify_complex(A, r).ok);
        CHECK(verify_exactness(A, r, 8).exact);
        CHECK(verify_minimality(r));
    }

    TEST_CASE("shipped .maps files match the constructions")
    {
        for (int m : {5, 6, 7}) {
            auto p = build_C(m);
            auto text = testing::read_data("C" + std::to_string(m) + ".maps");
            CHECK(complex_to_text(p, parse_complex(p, text)) == complex_to_text(p, build_C_complex(p, m)));
        }
        auto b = build_B();
        CHECK(complex_to_text(b, parse_complex(b, testing::read_data("B.maps"))) ==
              complex_to_text(b, build_B_complex(b)));
    }

    TEST_CASE("identity-shaped second map is caught")
    {
        K k;
        auto p = build_C(5);
        auto c = build_C_complex(p, 5);
        auto& l2 = c.maps[1];
        MatrixSpec id(l2.rows, l2.cols);
        for (std::size_t i = 0; i < std::min(id.rows, id.cols); ++i)
            id.at(i, i) = NcPoly<RationalField>::constant(RationalField{}, 1);
        l2 = id;
        Algebra<K> A(p, k, GbOptions{8});
        auto cert = verify_complex(A, c);
        CHECK_FALSE(cert.ok);
        CHECK(cert.failed_map == 2);
        CHECK_FALSE(cert.normal_form.empty());
        CHECK_FALSE(verify_minimality(c));
    }

    TEST_CASE("failure names the block")
    {
        K k;
        auto p = build_C(5);
        auto c = build_C_complex(p, 5);
        // double one single-term entry of lambda_2
        auto& l2 = c.maps[1];
        for (std::size_t i = 0; i < l2.entries.size(); ++i)
            if (l2.entries[i].size() == 1) {
                l2.entries[i] = scale(RationalField{}, mpq_class(2), l2.entries[i]);
                break;
            }
        Algebra<K> A(p, k, GbOptions{8});
        auto cert = verify_complex(A, c);
        CHECK_FALSE(cert.ok);
        CHECK_FALSE(cert.block.empty());
        CHECK(cert.message.find("d_2 d_1") != std::string::npos);
    }

    TEST_CASE("dropping the last map leaves homology at position m-1")
    {
        K k;
        for (int m : {5, 6}) {
            auto p = build_C(m);
            auto c = build_C_complex(p, m);
            c.maps.pop_back();
            c.shifts.pop_back();
            Algebra<K> A(p, k, GbOptions{m + 3});
            CHECK(verify_complex(A, c).ok);
            auto ex = verify_exactness(A, c, m + 3);
            CHECK_FALSE(ex.exact);
            REQUIRE(ex.failure.has_value());
            CHECK(ex.failure->position == m - 1);
            CHECK(ex.failure->degree == m + 1);
        }
    }

    TEST_CASE("minimality")
    {
        auto p = build_C(5);
        auto c = build_C_complex(p, 5);
        CHECK(verify_minimality(c));
        c.maps[0].at(0, 0) = add(RationalField{}, c.maps[0].at(0, 0), NcPoly<RationalField>::constant(RationalField{}, 1));
        CHECK_FALSE(verify_minimality(c));
        CHECK(verify_minimality(std::vector<MatrixSpec>{}));
    }

    TEST_CASE("exhaustive and pruned exactness agree")
    {
        K k;
        auto p = build_C(5);
        auto c = build_C_complex(p, 5);
        Algebra<K> A(p, k, GbOptions{6});
        auto pruned = verify_exactness(A, c, 5);
        auto full = verify_exactness(A, c, 5, true, {}, true);
        CHECK(pruned.exact);
        CHECK(full.exact);
        CHECK(full.multidegrees_checked > pruned.multidegrees_checked);

        c.maps.pop_back();
        c.shifts.pop_back();
        auto pruned_bad = verify_exactness(A, c, 6);
        auto full_bad = verify_exactness(A, c, 6, true, {}, true);
        CHECK_FALSE(pruned_bad.exact);
        CHECK_FALSE(full_bad.exact);
        REQUIRE(pruned_bad.failure.has_value());
        REQUIRE(full_bad.failure.has_value());
        CHECK(pruned_bad.failure->position == full_bad.failure->position);
        CHECK(pruned_bad.failure->degree == full_bad.failure->degree);

        auto b = build_B();
        auto r = build_B_complex(b);
        Algebra<K> B(b, k, GbOptions{5});
        CHECK(verify_exactness(B, r, 5, true, {}, true).exact);
    }

    TEST_CASE("single-entry mutations are detected")
    {
        K k;
        std::mt19937_64 g(7);
        struct Target {
            Presentation p;
            ComplexSpec c;
            int jmax;
        };
        std::vector<Target> targets;
        for (int m : {5, 6, 7}) {
            auto p = build_C(m);
            targets.push_back({p, build_C_complex(p, m), m + 3});
        }
        auto b = build_B();
        targets.push_back({b, build_B_complex(b), 8});
        for (int t = 0; t < 20; ++t) {
            auto& tg = targets[t % targets.size()];
            auto c = tg.c;
            auto mu = testing::mutate(tg.p, c, g);
            CAPTURE(mu.describe());
            Algebra<K> A(tg.p, k, GbOptions{tg.jmax});
            bool caught = !verify_complex(A, c).ok || !verify_minimality(c) || !verify_exactness(A, c, tg.jmax).exact;
            CHECK(caught);
        }
    }

    TEST_CASE("a sign flip absorbed by a change of basis is still a resolution")
    {
        // row 9 of the second map of C(6) is (z1) alone, and the generators it meets in the third
        // map meet nothing else there, so negating it is a diagonal change of basis
        K k;
        auto p = build_C(6);
        auto c = build_C_complex(p, 6);
        CHECK(testing::absorbed_by_rescaling(c, 1, 8, 8, mpq_class(-1)));
        CHECK_FALSE(testing::absorbed_by_rescaling(c, 0, 1, 0, mpq_class(-1)));
        RationalField q;
        auto& e = c.maps[1].at(8, 8);
        REQUIRE(e.terms().size() == 1);
        e = NcPoly<RationalField>::from_terms(q, {{e.terms()[0].word, -e.terms()[0].coeff}});
        Algebra<K> A(p, k, GbOptions{9});
        CHECK(verify_complex(A, c).ok);
        CHECK(verify_minimality(c));
        CHECK(verify_exactness(A, c, 9).exact);
    }

    TEST_CASE("graded kernel examples")
    {
        K k;
        auto p = build_C(5);
        Algebra<K> A(p, k, GbOptions{7});
        // nothing annihilates n from the left
        for (int j = 0; j <= 6; ++j)
            CHECK(graded_kernel(A, one_by_one(p, "n"), {0}, {-1}, j).empty());
        // ann(x2) in degree one is spanned by v, w, x1
        auto ker = graded_kernel(A, one_by_one(p, "x2"), {0}, {-1}, 1);
        CHECK(ker.size() == 3);
        std::set<std::string> letters;
        for (const auto& v : ker) {
            REQUIRE(v.size() == 1);
            for (const auto& t : v[0].terms())
                letters.insert(word_to_string(t.word, p.names()));
        }
        CHECK(letters == std::set<std::string>{"v", "w", "x1"});
        // kernel of the zero map is everything
        CHECK(graded_kernel(A, one_by_one(p, "0"), {0}, {-1}, 1).size() == 15);
        CHECK(graded_kernel(A, one_by_one(p, "0"), {0}, {-1}, 0).size() == 1);
    }

    TEST_CASE("graded kernel agrees with dense kernels on random maps")
    {
        K k;
        auto p = build_C(5);
        auto q = oracle::from_presentation(p);
        Algebra<K> A(p, k, GbOptions{6});
        std::mt19937_64 g(11);
        for (int t = 0; t < 20; ++t) {
            auto rm = testing::random_map(q, g);
            for (int j = 0; j <= 4; ++j) {
                auto ker = graded_kernel(A, rm.m, {0, 0}, {-1, -1}, j);
                CAPTURE(t);
                CAPTURE(j);
                CHECK(static_cast<std::int64_t>(ker.size()) == testing::dense_kernel_dim(q, rm, j));
                // each vector is a syzygy, and the vectors are independent
                std::map<std::pair<std::size_t, std::vector<Letter>>, std::size_t> index;
                std::vector<oracle::Vec> coords;
                for (const auto& v : ker) {
                    for (std::size_t col = 0; col < 2; ++col) {
                        NcPoly<K> s;
                        for (std::size_t h = 0; h < 2; ++h)
                            s = add(k, s, A.product(v[h], A.convert(rm.m.at(h, col))));
                        CHECK(s.is_zero());
                    }
                    oracle::Vec x;
                    for (std::size_t h = 0; h < 2; ++h)
                        for (const auto& term : v[h].terms()) {
                            auto key = std::make_pair(h, std::vector<Letter>(term.word.begin(), term.word.end()));
                            auto it = index.find(key);
                            std::size_t id = it == index.end() ? index.emplace(key, index.size()).first->second : it->second;
                            x[id] = term.coeff;
                        }
                    coords.push_back(x);
                }
                CHECK(oracle::rank(coords) == ker.size());
            }
        }
    }

    TEST_CASE("annihilator statements")
    {
        K k;
        for (int m : {5, 6}) {
            auto p = build_C(m);
            Algebra<K> A(p, k, GbOptions{m + 3});
            for (const auto& cl : annihilator_claims(p, m)) {
                auto r = check_annihilator(A, cl.name, cl.target, cl.generators, m + 3);
                CAPTURE(cl.name);
                CHECK(r.generators_annihilate);
                if (!cl.informational)
                    CHECK(r.equal);
            }
        }
    }

    TEST_CASE("a wrong annihilator claim fails")
    {
        K k;
        auto p = build_C(5);
        Algebra<K> A(p, k, GbOptions{8});
        // x2 is killed by v, w, x1 but not by x1 alone generating everything
        auto r = check_annihilator(A, "ann(x2) = (x1)", one_by_one(p, "x2"), one_by_one(p, "x1"), 8);
        CHECK(r.generators_annihilate);
        CHECK_FALSE(r.equal);
        // n does not kill x2
        auto s = check_annihilator(A, "ann(x2) = (n)", one_by_one(p, "x2"), one_by_one(p, "n"), 8);
        CHECK_FALSE(s.generators_annihilate);
    }

    TEST_CASE("S3 S4 spans a six dimensional subspace")
    {
        K k;
        auto p = build_C(5);
        Algebra<K> A(p, k, GbOptions{4});
        std::vector<SparseVec<K>> rows;
        std::map<Word, std::uint32_t, LexLess> idx;
        for (auto* e : {"s*v", "s*x1", "t*v", "t*w", "u*v", "u*w"}) {
            auto f = A.normal_form(A.convert(parse_expression(p, e)));
            std::map<std::uint32_t, std::uint32_t> v;
            for (const auto& t : f.terms()) {
                auto it = idx.emplace(t.word, static_cast<std::uint32_t>(idx.size())).first;
                v[it->second] = t.coeff;
            }
            rows.push_back(SparseVec<K>(v.begin(), v.end()));
        }
        CHECK(rank_of(k, idx.size(), rows) == 6);
    }
}
