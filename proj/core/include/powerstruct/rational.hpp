#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace powerstruct {

/// Intermediate width for checked products and sums.
__extension__ typedef __int128 wide_int;

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so structural
/// equality is value equality. Every arithmetic operation is checked: a result
/// that does not fit in 64 bits throws std::overflow_error rather than wrapping.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }

    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend constexpr bool operator==(const Rational &, const Rational &) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs);

    /// Canonical "p/q" form, e.g. "3/2", "-1/1", "0/1".
    [[nodiscard]] std::string to_string() const;
    /// Accepts "p/q", "p" (integer) and surrounding whitespace.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::size_t hash() const noexcept;

private:
    static Rational from_wide(wide_int num, wide_int den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace powerstruct

template <>
struct std::hash<powerstruct::Rational> {
    std::size_t operator()(const powerstruct::Rational &r) const noexcept { return r.hash(); }
};
