#include "qalg/constructions.hpp"

#include <stdexcept>

namespace qalg {

namespace {

std::string idx(const char* base, int i) { return base + std::to_string(i); }

}  // namespace

std::vector<std::vector<std::string>> c_layers(int m)
{
    if (m < 5)
        throw std::invalid_argument("C(m) is constructed for m >= 5 only (got " + std::to_string(m) + ")");
    std::vector<std::vector<std::string>> s;
    s.push_back({"n"});
    s.push_back({"p", "q", "r"});
    s.push_back({"s", "t", "u"});
    s.push_back({"v", "w", "x1", "y1", "z1"});
    for (int k = 2; k <= m - 4; ++k)
        s.push_back({idx("x", k), idx("y", k), idx("z", k)});
    s.push_back({idx("x", m - 3), idx("y", m - 3)});
    s.push_back({idx("x", m - 2)});
    return s;
}

Presentation build_C(int m)
{
    if (m > 80)
        throw std::invalid_argument("m too large");
    Presentation p;
    for (const auto& layer : c_layers(m))
        for (const auto& name : layer)
            p.add_generator(name);
    auto rel = [&](const std::string& e) { p.add_relation(e); };
    rel("n*p - n*q");
    rel("n*p - n*r");
    rel("p*s - p*t");
    rel("q*t - q*u");
    rel("r*s - r*u");
    rel("s*v - s*w");
    rel("t*w - t*x1");
    rel("u*v - u*x1");
    rel("v*x2");
    rel("w*x2");
    for (int i = 1; i <= m - 3; ++i)
        rel(idx("x", i) + "*" + idx("x", i + 1));
    rel("s*v - s*y1");
    rel("t*w - t*y1");
    rel("u*x1 - u*y1");
    rel("s*z1");
    rel("t*z1");
    rel("u*z1");
    for (int i = 2; i <= m - 3; ++i)
        rel(idx("y", i - 1) + "*" + idx("x", i) + " + " + idx("z", i - 1) + "*" + idx("y", i));
    for (int i = 1; i <= m - 5; ++i)
        rel(idx("z", i) + "*" + idx("z", i + 1));
    return p;
}

Presentation build_B(BVariant v)
{
    Presentation p;
    for (const char* g : {"n", "p", "q", "r", "s", "t", "u", "v", "w", "x1", "y1", "a", "b"})
        p.add_generator(g);
    for (const char* r : {"n*p - n*q", "n*p - n*r", "p*s - p*t", "q*t - q*u", "r*s - r*u", "s*v - s*w",
                          "t*w - t*x1", "u*v - u*x1"})
        p.add_relation(r);
    if (v == BVariant::Full)
        for (const char* r : {"s*v - s*y1", "t*w - t*y1", "u*x1 - u*y1"})
            p.add_relation(r);
    for (const char* r : {"v*a - v*b", "w*a - w*b", "x1*a - x1*b"})
        p.add_relation(r);
    return p;
}

namespace {

using Table = std::vector<std::vector<std::string>>;

MatrixSpec from_table(const Presentation& p, const std::string& name, const Table& t)
{
    MatrixSpec m(t.size(), t.empty() ? 0 : t[0].size());
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (t[r].size() != m.cols)
            throw std::logic_error("block " + name + " is ragged");
        for (std::size_t c = 0; c < m.cols; ++c)
            if (t[r][c] != "0")
                m.at(r, c) = parse_expression(p, t[r][c]);
    }
    m.blocks.push_back({name, 0, 0, m.rows, m.cols});
    return m;
}

// Block diagonal assembly; the block names carry over.
MatrixSpec diag(const std::vector<MatrixSpec>& parts)
{
    std::size_t R = 0, C = 0;
    for (const auto& b : parts) {
        R += b.rows;
        C += b.cols;
    }
    MatrixSpec m(R, C);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : parts) {
        for (std::size_t r = 0; r < b.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c)
                m.at(r0 + r, c0 + c) = b.at(r, c);
        for (const auto& blk : b.blocks)
            m.blocks.push_back({blk.name, r0 + blk.row, c0 + blk.col, blk.rows, blk.cols});
        r0 += b.rows;
        c0 += b.cols;
    }
    return m;
}

}  // namespace

MatrixSpec named_block(const Presentation& p, const std::string& name, int j)
{
    if (name == "alpha")
        return from_table(p, name, {{"0", "0", "0", "p", "0", "0", "-p", "p", "0"},
                                    {"0", "0", "0", "0", "q", "0", "0", "-q", "q"},
                                    {"0", "0", "0", "0", "0", "r", "-r", "0", "r"}});
    if (name == "alpha'")
        return from_table(p, name, {{"p", "0", "0", "-p", "p", "0"},
                                    {"0", "q", "0", "0", "-q", "q"},
                                    {"0", "0", "r", "-r", "0", "r"}});
    if (name == "beta")
        return from_table(p, name, {{"s", "-s", "0", "0"},
                                    {"0", "t", "-t", "0"},
                                    {"u", "0", "-u", "0"},
                                    {"s", "0", "0", "-s"},
                                    {"0", "t", "0", "-t"},
                                    {"0", "0", "u", "-u"}});
    if (name == "beta'")
        return from_table(p, name, {{"s", "-s", "0"}, {"0", "t", "-t"}, {"u", "0", "-u"}});
    if (name == "gamma")
        return from_table(p, name, {{"v", "0"}, {"w", "0"}, {"x1", "0"}, {"y1", "z1"}});
    if (name == "gamma'")
        return from_table(p, name, {{"v"}, {"w"}, {"x1"}});
    if (name == "gamma' -gamma'")
        return from_table(p, name, {{"v", "-v"}, {"w", "-w"}, {"x1", "-x1"}});
    if (name == "chi")
        return from_table(p, "chi_" + std::to_string(j), {{idx("x", j), "0"}, {idx("y", j), idx("z", j)}});
    if (name == "delta")
        return from_table(p, name, {{"-p", "p", "0"}, {"0", "-q", "q"}, {"-r", "0", "r"}});
    if (name == "epsilon")
        return from_table(p, name, {{"s"}, {"t"}, {"u"}});
    if (name == "zeta") {
        Table t(j, std::vector<std::string>(j, "0"));
        for (int i = 0; i < j; ++i)
            t[i][i] = idx("z", i + 1);
        return from_table(p, "zeta_" + std::to_string(j), t);
    }
    if (name == "eta")
        return from_table(p, name, {{"0", "n", "n", "-n"}});
    if (name == "eta'")
        return from_table(p, name, {{"0", "n", "-n", "0"}, {"0", "n", "0", "-n"}});
    if (name == "0 eta")
        return from_table(p, "[0 eta]", {{"0", "0", "n", "n", "-n"}});
    if (name == "x")
        return from_table(p, idx("x", j), {{idx("x", j)}});
    if (name == "top")
        return from_table(p, name, {{"0", "0", "0", "0", "n*p", "n*p", "-n*p"}});
    throw std::invalid_argument("unknown block '" + name + "'");
}

std::vector<int> c_complex_ranks(int m)
{
    std::vector<int> r(m + 1);
    r[0] = 1;
    r[1] = 3 * m;
    r[2] = 3 * m + 4;
    for (int i = 3; i <= m - 3; ++i)
        r[i] = 3 * m + 12 - 3 * i;
    r[m - 2] = 16;
    r[m - 1] = 7;
    r[m] = 1;
    return r;
}

std::vector<int> c_complex_shifts(int m)
{
    std::vector<int> s(m + 1);
    for (int i = 0; i < m; ++i)
        s[i] = i;
    s[m] = m + 1;
    return s;
}

ComplexSpec build_C_complex(const Presentation& c, int m)
{
    if (m < 5)
        throw std::invalid_argument("C(m) is constructed for m >= 5 only");
    auto B = [&](const std::string& name, int j = 0) { return named_block(c, name, j); };
    ComplexSpec cx;
    cx.name = "C" + std::to_string(m);
    std::vector<MatrixSpec> maps;

    // lambda_1: the column of generators in the order (n p q r s t u z_1.. v w x1 y1 x2 y2 .. x_{m-2})
    {
        std::vector<std::string> order = {"n", "p", "q", "r", "s", "t", "u"};
        for (int k = 1; k <= m - 4; ++k)
            order.push_back(idx("z", k));
        for (const char* g : {"v", "w", "x1", "y1"})
            order.push_back(g);
        for (int k = 2; k <= m - 3; ++k) {
            order.push_back(idx("x", k));
            order.push_back(idx("y", k));
        }
        order.push_back(idx("x", m - 2));
        Table t;
        for (const auto& g : order)
            t.push_back({g});
        maps.push_back(from_table(c, "lambda_1", t));
    }
    // lambda_2
    {
        std::vector<MatrixSpec> parts = {B("eta'"), B("delta"), B("epsilon")};
        if (m - 5 > 0)
            parts.push_back(B("zeta", m - 5));
        parts.push_back(B("beta"));
        parts.push_back(B("gamma"));
        for (int j = 2; j <= m - 4; ++j)
            parts.push_back(B("chi", j));
        parts.push_back(B("x", m - 3));
        maps.push_back(diag(parts));
    }
    if (m == 5) {
        maps.push_back(diag({B("0 eta"), B("delta"), B("alpha'"), B("beta"), B("gamma'")}));
    } else {
        // lambda_3
        std::vector<MatrixSpec> parts = {B("0 eta"), B("delta"), B("epsilon")};
        if (m - 6 > 0)
            parts.push_back(B("zeta", m - 6));
        parts.push_back(B("alpha'"));
        parts.push_back(B("beta"));
        parts.push_back(B("gamma"));
        for (int j = 2; j <= m - 5; ++j)
            parts.push_back(B("chi", j));
        parts.push_back(B("x", m - 4));
        maps.push_back(diag(parts));
        // lambda_j for 4 <= j <= m - 3
        for (int j = 4; j <= m - 3; ++j) {
            std::vector<MatrixSpec> q = {B("eta"), B("delta"), B("epsilon")};
            if (m - j - 3 > 0)
                q.push_back(B("zeta", m - j - 3));
            q.push_back(B("alpha"));
            q.push_back(B("beta"));
            q.push_back(B("gamma"));
            for (int i = 2; i <= m - j - 2; ++i)
                q.push_back(B("chi", i));
            q.push_back(B("x", m - j - 1));
            maps.push_back(diag(q));
        }
        // lambda_{m-2}
        maps.push_back(diag({B("eta"), B("delta"), B("alpha"), B("beta"), B("gamma'")}));
    }
    maps.push_back(diag({B("eta"), B("alpha"), B("beta'")}));  // lambda_{m-1}
    maps.push_back(B("top"));                                  // lambda_m

    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (auto& b : maps[i].blocks)
            b.name = "lambda_" + std::to_string(i + 1) + ":" + b.name;
    }
    auto ranks = c_complex_ranks(m);
    auto shifts = c_complex_shifts(m);
    for (int i = 0; i <= m; ++i)
        cx.shifts.push_back(std::vector<int>(ranks[i], shifts[i]));
    cx.maps = std::move(maps);
    cx.check_shapes();
    return cx;
}

ComplexSpec build_B_complex(const Presentation& b)
{
    auto B = [&](const std::string& name, int j = 0) { return named_block(b, name, j); };
    ComplexSpec cx;
    cx.name = "B";
    Table col;
    for (const auto& g : b.generators)
        col.push_back({g.name});
    cx.maps.push_back(from_table(b, "psi_1", col));
    cx.maps.push_back(diag({B("eta'"), B("delta"), B("beta"), B("gamma' -gamma'")}));
    cx.maps.push_back(diag({B("0 eta"), B("alpha'"), B("beta'")}));
    cx.maps.push_back(B("top"));
    for (std::size_t i = 0; i < cx.maps.size(); ++i)
        for (auto& blk : cx.maps[i].blocks)
            blk.name = "psi_" + std::to_string(i + 1) + ":" + blk.name;
    cx.shifts = {{0}, std::vector<int>(13, 1), std::vector<int>(14, 2), std::vector<int>(7, 3), {5}};
    cx.check_shapes();
    return cx;
}

std::vector<AnnihilatorClaim> annihilator_claims(const Presentation& c, int m)
{
    auto B = [&](const std::string& name, int j = 0) { return named_block(c, name, j); };
    auto none = [](const MatrixSpec& t) { return MatrixSpec(0, t.rows); };
    std::vector<AnnihilatorClaim> out;
    auto n = from_table(c, "n", {{"n"}});
    out.push_back({"ann(n) = 0", n, none(n)});
    auto eta = B("eta");
    out.push_back({"ann(eta) = 0", eta, none(eta)});
    auto etap = B("eta'");
    out.push_back({"ann(eta') = 0", etap, none(etap)});
    auto alpha = B("alpha");
    out.push_back({"ann(alpha) = 0", alpha, none(alpha)});
    auto top = B("top");
    out.push_back({"ann(lambda_" + std::to_string(m) + ") = 0", top, none(top)});
    out.push_back({"ann(x2) = rows of gamma'", B("x", 2), B("gamma'")});
    out.push_back({"ann(beta) = rows of alpha'", B("beta"), B("alpha'")});
    out.push_back({"ann(delta) = (n, n, -n)", B("delta"), from_table(c, "(n n -n)", {{"n", "n", "-n"}})});
    out.push_back({"ann(gamma') = rows of beta'", B("gamma'"), B("beta'")});
    out.push_back({"ann(epsilon) = rows of delta", B("epsilon"), B("delta")});
    out.push_back({"ann(beta') = (np, np, -np)", B("beta'"), from_table(c, "(np np -np)", {{"n*p", "n*p", "-n*p"}}),
                   true});
    return out;
}

}  // namespace qalg
