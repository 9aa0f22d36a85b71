#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qalg {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integers modulo an odd prime p < 2^31. Elements are canonical representatives in [0, p).
class PrimeField {
public:
    using Elem = std::uint32_t;

    static constexpr std::uint32_t kDefaultPrime = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }

    Elem add(Elem a, Elem b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const
    {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    // a - b*c, the elimination inner step
    Elem sub_mul(Elem a, Elem b, Elem c) const { return sub(a, mul(b, c)); }

    // Inverse of a nonzero element; nullopt for zero.
    std::optional<Elem> try_inv(Elem a) const;
    // Throws FieldError on zero.
    Elem inv(Elem a) const;

    Elem from_int(long long v) const;
    // Reduce a rational number; fails when the denominator vanishes mod p.
    std::optional<Elem> from_rational(const mpq_class& q) const;

    std::string to_string(Elem a) const { return std::to_string(a); }
    // Parses a decimal integer or a fraction "a/b"; the result is reduced mod p.
    Elem parse(std::string_view text) const;

    // Integer value used when printing signed coefficients: a if a <= p/2, a - p otherwise.
    long long symmetric(Elem a) const { return a <= p_ / 2 ? static_cast<long long>(a) : static_cast<long long>(a) - p_; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint64_t n);

private:
    std::uint32_t p_;
};

// The rational numbers, exact via GMP.
class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem sub_mul(const Elem& a, const Elem& b, const Elem& c) const { return a - b * c; }

    std::optional<Elem> try_inv(const Elem& a) const;
    Elem inv(const Elem& a) const;

    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
    std::optional<Elem> from_rational(const mpq_class& q) const { return q; }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    Elem parse(std::string_view text) const;

    bool operator==(const RationalField&) const { return true; }
};

// Runtime description of the active field: "p:<prime>" or "q".
struct FieldSpec {
    enum class Kind { Prime, Rational };
    Kind kind = Kind::Prime;
    std::uint32_t prime = PrimeField::kDefaultPrime;

    static FieldSpec parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;
};

// Parses "a" or "a/b" into an exact rational. Throws FieldError on malformed input or zero denominator.
mpq_class parse_rational(std::string_view text);

}  // namespace qalg
