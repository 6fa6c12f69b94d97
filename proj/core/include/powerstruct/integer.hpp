#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace powerstruct {

/// Arbitrary-precision integer coefficient.
using Integer = mpz_class;

inline std::string to_string(const Integer &z) { return z.get_str(); }

/// Coefficient of t^j in (1 - t)^{-c}, i.e. c (c+1) ... (c+j-1) / j!.
///
/// Valid for every integer c; for c < 0 this is (-1)^j C(|c|, j), which is
/// zero once j > |c|.
inline Integer multichoose(const Integer &c, std::uint64_t j)
{
    Integer out = 1;
    for (std::uint64_t i = 1; i <= j; ++i) {
        out *= c + static_cast<unsigned long>(i - 1);
        mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return out;
}

/// Binomial C(n, k) for non-negative n; zero when k > n.
inline Integer binomial(std::uint64_t n, std::uint64_t k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline Integer factorial(std::uint64_t n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

} // namespace powerstruct
