#include "qalg/verify.hpp"

namespace qalg {

namespace {

int row_degree(const Presentation& p, const MatrixSpec& m, std::size_t r)
{
    for (std::size_t c = 0; c < m.cols; ++c) {
        const auto& e = m.at(r, c);
        if (!e.is_zero())
            return p.degree(e.leading_word());
    }
    return 1;
}

}  // namespace

ComplexSpec annihilator_complex(const Presentation& p, const MatrixSpec& target, const MatrixSpec& generators)
{
    ComplexSpec c;
    c.name = "annihilator";
    std::vector<int> s0(target.cols, -1), s1(target.rows, 0), s2;
    for (std::size_t col = 0; col < target.cols; ++col)
        for (std::size_t r = 0; r < target.rows; ++r) {
            const auto& e = target.at(r, col);
            if (!e.is_zero()) {
                s0[col] = -p.degree(e.leading_word());
                break;
            }
        }
    for (std::size_t r = 0; r < generators.rows; ++r)
        s2.push_back(row_degree(p, generators, r));
    MatrixSpec gens = generators;
    if (gens.rows == 0)
        gens = MatrixSpec(0, target.rows);
    c.shifts = {s0, s1, s2};
    c.maps = {target, gens};
    return c;
}

}  // namespace qalg
