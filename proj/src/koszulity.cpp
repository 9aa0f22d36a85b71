#include "qalg/koszulity.hpp"

#include <algorithm>

namespace qalg {

KoszulityReport koszulity_report(const BettiTable& b)
{
    KoszulityReport r;
    r.imax = b.imax;
    r.jmax = b.jmax;
    r.bound = std::min(b.jmax, b.imax + 1);
    int first_bad = r.bound + 1;
    for (int j = 0; j <= b.jmax; ++j)
        for (int i = 0; i <= b.imax; ++i) {
            std::int64_t v = b.at(i, j);
            if (v == 0)
                continue;
            r.global_dimension_lower = std::max(r.global_dimension_lower, i);
            if (i < j) {
                r.off_diagonal.push_back({i, j, v});
                first_bad = std::min(first_bad, j);
            }
        }
    r.max_m_koszul = std::min(r.bound, first_bad - 1);
    r.not_koszul = !r.off_diagonal.empty();
    for (int j = 0; j <= b.jmax; ++j) {
        int rows = 0, row = -1;
        for (int i = 0; i <= b.imax; ++i)
            if (b.at(i, j)) {
                ++rows;
                row = i;
            }
        if (rows == 1)
            r.delta[j] = row;
        else if (rows > 1)
            r.delta_conflicts.push_back(j);
    }
    r.delta_fits = r.delta_conflicts.empty();
    r.top_row_empty = b.row_total(b.imax) == 0;
    if (r.not_koszul) {
        const auto& w = r.off_diagonal.front();
        r.verdict = "not Koszul: b(" + std::to_string(w.i) + "," + std::to_string(w.j) + ") = " +
                    std::to_string(w.value) + "; " + std::to_string(r.max_m_koszul) + "-Koszul";
    } else {
        r.verdict = std::to_string(r.max_m_koszul) + "-Koszul for every checked m; no off-diagonal class within bounds";
    }
    return r;
}

PowerSeries poincare_at_minus_one(const BettiTable& b)
{
    std::vector<std::int64_t> c(b.jmax + 1, 0);
    for (int i = 0; i <= b.imax; ++i)
        for (int j = 0; j <= b.jmax; ++j)
            c[j] += (i % 2 ? -1 : 1) * b.at(i, j);
    return PowerSeries(std::move(c));
}

PoincareCheck poincare_hilbert_identity(const BettiTable& b, const PowerSeries& hilbert)
{
    PoincareCheck out;
    out.through = (b.row_total(b.imax) == 0 || b.imax >= b.jmax) ? b.jmax : b.imax;
    out.through = std::min(out.through, hilbert.truncation());
    out.product = poincare_at_minus_one(b).times(hilbert, out.through);
    out.holds = true;
    for (int d = 0; d <= out.through; ++d)
        if (out.product[d] != (d == 0 ? 1 : 0))
            out.holds = false;
    return out;
}

}  // namespace qalg
