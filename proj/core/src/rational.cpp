#include <powerstruct/rational.hpp>

#include <powerstruct/errors.hpp>

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace powerstruct {

namespace {

wide_int gcd128(wide_int a, wide_int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(wide_int v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int64(std::string_view s, std::string_view whole)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("invalid rational: '" + std::string(whole) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(num, den);
}

Rational Rational::from_wide(wide_int num, wide_int den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        den = 1;
    } else {
        const wide_int g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational exponent overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational &Rational::operator+=(const Rational &rhs)
{
    if (den_ == 1 && rhs.den_ == 1) {
        std::int64_t out = 0;
        if (__builtin_add_overflow(num_, rhs.num_, &out)) throw std::overflow_error("rational exponent overflow");
        num_ = out;
        return *this;
    }
    const wide_int n = static_cast<wide_int>(num_) * rhs.den_ + static_cast<wide_int>(rhs.num_) * den_;
    const wide_int d = static_cast<wide_int>(den_) * rhs.den_;
    return *this = from_wide(n, d);
}

Rational &Rational::operator-=(const Rational &rhs) { return *this += -rhs; }

Rational &Rational::operator*=(const Rational &rhs)
{
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.num_, static_cast<wide_int>(den_) * rhs.den_);
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.den_, static_cast<wide_int>(den_) * rhs.num_);
}

Rational Rational::operator-() const
{
    if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational exponent overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs)
{
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    return static_cast<wide_int>(lhs.num_) * rhs.den_ <=> static_cast<wide_int>(rhs.num_) * lhs.den_;
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int64(s, text));
    const std::int64_t n = parse_int64(trim(s.substr(0, slash)), text);
    const std::int64_t d = parse_int64(trim(s.substr(slash + 1)), text);
    if (d == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(n, d);
}

std::size_t Rational::hash() const noexcept
{
    const auto h1 = std::hash<std::int64_t>{}(num_);
    const auto h2 = std::hash<std::int64_t>{}(den_);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    os << r.num();
    if (!r.is_integer()) os << '/' << r.den();
    return os;
}

} // namespace powerstruct
