#include "qalg/series.hpp"

#include <algorithm>

namespace qalg {

namespace {

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b)
{
    std::int64_t prod;
    if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
        throw std::overflow_error("power series coefficient overflows 64 bits");
    return acc;
}

}  // namespace

PowerSeries PowerSeries::truncated(int D) const
{
    std::vector<std::int64_t> c(D + 1, 0);
    for (int i = 0; i <= D && i < static_cast<int>(c_.size()); ++i)
        c[i] = c_[i];
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::times(const PowerSeries& o, int D) const
{
    D = std::min({D, truncation(), o.truncation()});
    std::vector<std::int64_t> c(std::max(D + 1, 0), 0);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            if (c_[i] && o.c_[j])
                c[i + j] = checked_mul_add(c[i + j], c_[i], o.c_[j]);
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::inverse(int D) const
{
    if (c_.empty() || (c_[0] != 1 && c_[0] != -1))
        throw std::domain_error("series inversion needs constant term 1 or -1");
    std::int64_t u = c_[0];  // its own inverse
    std::vector<std::int64_t> r(D + 1, 0);
    r[0] = u;
    for (int n = 1; n <= D; ++n) {
        std::int64_t s = 0;
        for (int i = 1; i <= n && i < static_cast<int>(c_.size()); ++i)
            if (c_[i])
                s = checked_mul_add(s, c_[i], r[n - i]);
        r[n] = checked_mul_add(0, -u, s);
    }
    return PowerSeries(std::move(r));
}

std::string PowerSeries::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(c_[i]);
    }
    return s;
}

}  // namespace qalg
