#include <doctest.h>

#include "qalg/constructions.hpp"
#include "qalg/yoneda.hpp"
#include "support.hpp"

using namespace qalg;

namespace {

using K = PrimeField;

// Rows of X * Y (X : P -> Q, Y : Q -> R, right action), entries in normal form.
std::vector<std::map<std::uint32_t, NcPoly<K>>> compose(Algebra<K>& A, const SparseMatrix<K>& X, const SparseMatrix<K>& Y)
{
    const K& k = A.field();
    std::vector<std::map<std::uint32_t, NcPoly<K>>> out(X.num_rows());
    for (std::size_t g = 0; g < X.num_rows(); ++g) {
        for (const auto& [h, a] : X.rows[g])
            for (const auto& [c, b] : Y.rows[h])
                out[g][c] = add(k, out[g][c], A.product(a, b));
        std::erase_if(out[g], [](const auto& e) { return e.second.is_zero(); });
    }
    return out;
}

// (sum of coords) * e_{i3,g3}, extended linearly in the left factor
SparseVec<K> times_right(Yoneda<K>& Y, const K& k, std::size_t i12, const SparseVec<K>& v, std::size_t i3, std::size_t g3)
{
    std::map<std::uint32_t, K::Elem> acc;
    for (const auto& [h, c] : v)
        for (const auto& [t, x] : Y.product(i12, h, i3, g3))
            acc[t] = k.add(acc[t], k.mul(c, x));
    SparseVec<K> out;
    for (const auto& [t, x] : acc)
        if (!k.is_zero(x))
            out.emplace_back(t, x);
    return out;
}

SparseVec<K> times_left(Yoneda<K>& Y, const K& k, std::size_t i1, std::size_t g1, std::size_t i23, const SparseVec<K>& v)
{
    std::map<std::uint32_t, K::Elem> acc;
    for (const auto& [h, c] : v)
        for (const auto& [t, x] : Y.product(i1, g1, i23, h))
            acc[t] = k.add(acc[t], k.mul(c, x));
    SparseVec<K> out;
    for (const auto& [t, x] : acc)
        if (!k.is_zero(x))
            out.emplace_back(t, x);
    return out;
}

BettiTable only(int I, int J, std::initializer_list<std::tuple<int, int, int>> cells)
{
    BettiTable t(I, J);
    for (auto [i, j, v] : cells)
        t.b[i][j] = v;
    return t;
}

}  // namespace

TEST_SUITE("yoneda")
{
    TEST_CASE("lifts are chain maps")
    {
        K k;
        auto p = build_C(5);
        Algebra<K> A(p, k, GbOptions{7});
        auto r = minimal_resolution(A, {5, 7, false});
        Yoneda<K> Y(A, r);
        for (std::size_t i2 : {1u, 2u})
            for (std::size_t g2 = 0; g2 < r.tau[i2].size(); g2 += 3) {
                const auto& L = Y.lift(i2, g2, Y.top() - i2);
                for (std::size_t s = 1; s < L.F.size(); ++s) {
                    // F_s D_s = D_{i2+s} F_{s-1}
                    auto lhs = compose(A, L.F[s], r.d[s - 1]);
                    auto rhs = compose(A, r.d[i2 + s - 1], L.F[s - 1]);
                    CHECK(lhs == rhs);
                }
            }
    }

    TEST_CASE("unit law")
    {
        K k;
        auto p = build_B();
        Algebra<K> A(p, k, GbOptions{5});
        auto r = minimal_resolution(A, {4, 5, false});
        Yoneda<K> Y(A, r);
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t g = 0; g < r.tau[i].size(); ++g) {
                SparseVec<K> e{{static_cast<std::uint32_t>(g), k.one()}};
                CHECK(Y.product(0, 0, i, g) == e);
                CHECK(Y.product(i, g, 0, 0) == e);
            }
        CHECK_THROWS_AS(Y.product(0, 1, 1, 0), std::out_of_range);
    }

    TEST_CASE("products are associative on random triples")
    {
        K k;
        for (auto p : {build_C(5), parse_presentation("gens x y z; rel x*y - y*x; rel x*z - z*x; rel y*z - z*y;")}) {
            Algebra<K> A(p, k, GbOptions{6});
            auto r = minimal_resolution(A, {4, 6, false});
            Yoneda<K> Y(A, r);
            auto& g = testing::rng();
            for (int t = 0; t < 40; ++t) {
                std::size_t i1 = 1 + t % 2, i2 = 1, i3 = 1;
                if (r.tau[i1 + i2 + i3].empty())
                    continue;
                auto pick = [&](std::size_t i) {
                    return std::uniform_int_distribution<std::size_t>(0, r.tau[i].size() - 1)(g);
                };
                std::size_t g1 = pick(i1), g2 = pick(i2), g3 = pick(i3);
                auto left = times_right(Y, k, i1 + i2, Y.product(i1, g1, i2, g2), i3, g3);
                auto right = times_left(Y, k, i1, g1, i2 + i3, Y.product(i2, g2, i3, g3));
                CHECK(left == right);
            }
        }
    }

    TEST_CASE("Ext of the polynomial ring is an exterior algebra")
    {
        K k;
        auto p = parse_presentation("gens x y z; rel x*y - y*x; rel x*z - z*x; rel y*z - z*y;");
        Algebra<K> A(p, k, GbOptions{5});
        auto r = minimal_resolution(A, {4, 5, false});
        Yoneda<K> Y(A, r);
        RowEchelon<K> span(k, r.tau[2].size());
        for (std::size_t a = 0; a < 3; ++a) {
            CHECK(Y.product(1, a, 1, a).empty());
            for (std::size_t b = 0; b < 3; ++b) {
                auto ab = Y.product(1, a, 1, b);
                auto ba = Y.product(1, b, 1, a);
                for (auto& [h, c] : ba)
                    c = k.neg(c);
                CHECK(ab == ba);
                span.insert(ab);
            }
        }
        CHECK(span.rank() == 3);
        // e_x e_y e_z spans Ext^3
        auto top = times_right(Y, k, 2, Y.product(1, 0, 1, 1), 1, 2);
        CHECK(top.size() == 1);
    }

    TEST_CASE("a non-Koszul monomial algebra needs a generator in (2,3)")
    {
        // Ext of k<x>/(x^3) is generated by e1 in (1,1) and e2 in (2,3); e1^2 = 0
        K k;
        auto p = parse_presentation("gens x; rel x*x*x;");
        Algebra<K> A(p, k, GbOptions{7});
        auto r = minimal_resolution(A, {4, 7, false});
        auto prof = generation_profile(A, r);
        CHECK(prof.fresh == only(4, 7, {{0, 0, 1}, {1, 1, 1}, {2, 3, 1}}));
        CHECK(prof.decomposable.at(3, 4) == 1);
        CHECK(prof.decomposable.at(4, 6) == 1);
    }

    TEST_CASE("the commutative plane is generated in degree one")
    {
        K k;
        auto p = parse_presentation("gens x y; rel x*y - y*x;");
        Algebra<K> A(p, k, GbOptions{5});
        auto r = minimal_resolution(A, {3, 5, false});
        auto prof = generation_profile(A, r);
        CHECK(prof.fresh == only(3, 5, {{0, 0, 1}, {1, 1, 2}}));
        for (bool d : prof.diagonal_spanned)
            CHECK(d);
    }

    TEST_CASE("generation profile of C(m)")
    {
        K k;
        for (int m : {5, 6}) {
            CAPTURE(m);
            auto p = build_C(m);
            Algebra<K> A(p, k, GbOptions{m + 2});
            auto r = minimal_resolution(A, {m + 1, m + 2, false});
            auto prof = generation_profile(A, r);
            CHECK(prof.fresh == only(m + 1, m + 2, {{0, 0, 1}, {1, 1, 3 * m}, {m, m + 1, 1}}));
            for (int i = 0; i <= m; ++i)
                CHECK(prof.diagonal_spanned[i]);
            // the top class is not a product
            CHECK(prof.decomposable.at(m, m + 1) == 0);
        }
    }

    TEST_CASE("generation profile of B")
    {
        K k;
        auto p = build_B();
        Algebra<K> A(p, k, GbOptions{6});
        auto r = minimal_resolution(A, {5, 6, false});
        auto prof = generation_profile(A, r);
        CHECK(prof.fresh == only(5, 6, {{0, 0, 1}, {1, 1, 13}, {4, 5, 1}}));
        for (bool d : prof.diagonal_spanned)
            CHECK(d);
    }
}
