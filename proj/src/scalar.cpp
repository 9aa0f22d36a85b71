#include "qalg/scalar.hpp"

#include <charconv>

namespace qalg {

bool PrimeField::is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
        throw FieldError("field characteristic must be an odd prime below 2^31, got " + std::to_string(p));
}

std::optional<PrimeField::Elem> PrimeField::try_inv(Elem a) const
{
    if (a == 0)
        return std::nullopt;
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += p_;
    return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::inv(Elem a) const
{
    auto r = try_inv(a);
    if (!r)
        throw FieldError("inverse of zero in F_" + std::to_string(p_));
    return *r;
}

PrimeField::Elem PrimeField::from_int(long long v) const
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Elem>(r);
}

std::optional<PrimeField::Elem> PrimeField::from_rational(const mpq_class& q) const
{
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (num < 0)
        num += p_;
    if (den < 0)
        den += p_;
    auto d = try_inv(static_cast<Elem>(den.get_ui()));
    if (!d)
        return std::nullopt;
    return mul(static_cast<Elem>(num.get_ui()), *d);
}

PrimeField::Elem PrimeField::parse(std::string_view text) const
{
    auto r = from_rational(parse_rational(text));
    if (!r)
        throw FieldError("denominator vanishes mod " + std::to_string(p_) + ": " + std::string(text));
    return *r;
}

std::optional<RationalField::Elem> RationalField::try_inv(const Elem& a) const
{
    if (sgn(a) == 0)
        return std::nullopt;
    return Elem(1) / a;
}

RationalField::Elem RationalField::inv(const Elem& a) const
{
    auto r = try_inv(a);
    if (!r)
        throw FieldError("inverse of zero in Q");
    return *r;
}

RationalField::Elem RationalField::parse(std::string_view text) const { return parse_rational(text); }

mpq_class parse_rational(std::string_view text)
{
    auto is_int = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw FieldError("malformed number: " + std::string(text));
    std::string n(num);
    if (n[0] == '+')
        n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0)
        throw FieldError("zero denominator: " + std::string(text));
    mpq_class q(zn, zd);
    q.canonicalize();
    return q;
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    FieldSpec spec;
    if (text == "q" || text == "Q") {
        spec.kind = Kind::Rational;
        return spec;
    }
    if (text.size() > 2 && (text.substr(0, 2) == "p:" || text.substr(0, 2) == "P:")) {
        std::uint64_t p = 0;
        auto body = text.substr(2);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec != std::errc() || ptr != body.data() + body.size())
            throw FieldError("malformed field descriptor: " + std::string(text));
        if (p >= (1ull << 31) || !PrimeField::is_prime(p) || p == 2)
            throw FieldError("field characteristic must be an odd prime below 2^31: " + std::string(text));
        spec.kind = Kind::Prime;
        spec.prime = static_cast<std::uint32_t>(p);
        return spec;
    }
    throw FieldError("field descriptor must be 'p:<prime>' or 'q', got '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const
{
    return kind == Kind::Rational ? std::string("q") : "p:" + std::to_string(prime);
}

}  // namespace qalg
