#pragma once

#include <map>
#include <string>
#include <vector>

#include "qalg/resolution.hpp"
#include "qalg/series.hpp"

namespace qalg {

struct BettiCell {
    int i = 0, j = 0;
    std::int64_t value = 0;
};

struct KoszulityReport {
    int imax = 0, jmax = 0;
    // m-Koszul is decidable for m <= bound = min(jmax, imax + 1)
    int bound = 0;
    // largest m <= bound with b(i, j) = 0 for all i < j <= m
    int max_m_koszul = 0;
    std::vector<BettiCell> off_diagonal;  // nonzero b(i, j) with i < j
    // column n -> row i when column n has exactly one nonzero row
    std::map<int, int> delta;
    std::vector<int> delta_conflicts;  // columns with several nonzero rows
    bool delta_fits = true;
    // largest row with a nonzero entry; `top_row_empty` says row imax vanishes through jmax
    int global_dimension_lower = 0;
    bool top_row_empty = false;
    bool not_koszul = false;
    std::string verdict;
};

KoszulityReport koszulity_report(const BettiTable& b);

// P(-1, g) = sum_i (-1)^i sum_j b(i, j) g^j.
PowerSeries poincare_at_minus_one(const BettiTable& b);

struct PoincareCheck {
    bool holds = false;
    int through = 0;  // degrees where the identity is decided
    PowerSeries product;
};

// Checks P(-1, g) H(g) = 1 through the largest degree the table determines: jmax when the last
// computed row is empty or imax >= jmax, imax otherwise.
PoincareCheck poincare_hilbert_identity(const BettiTable& b, const PowerSeries& hilbert);

}  // namespace qalg
