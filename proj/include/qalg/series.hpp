#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalg {

// Truncated integer power series c_0 + c_1 g + ... + c_D g^D.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {}

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::int64_t>& coefficients() const { return c_; }

    // Product truncated at min(D, both truncations). Throws std::overflow_error.
    PowerSeries times(const PowerSeries& o, int D) const;
    // Multiplicative inverse mod g^{D+1}; requires constant term +1 or -1.
    PowerSeries inverse(int D) const;
    PowerSeries truncated(int D) const;

    bool operator==(const PowerSeries& o) const { return c_ == o.c_; }
    std::string to_string() const;

private:
    std::vector<std::int64_t> c_;
};

inline PowerSeries invert_series(const PowerSeries& p, int D) { return p.inverse(D); }

}  // namespace qalg
