#pragma once

#include <powerstruct/classes.hpp>
#include <powerstruct/integer.hpp>

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

namespace powerstruct {

/// Coefficients of sigma_a(t) = 1 + a t + ... for the integers,
/// normalised by sigma_k(t) = (1 - t)^{-k}. Entry j is the coefficient of t^j,
/// j = 0..order.
std::vector<Integer> sigma_int(const Integer &k, std::size_t order);

/// sigma_a(t) = prod_e (1 - L^e t)^{-c_e} for a = sum_e c_e L^e.
std::vector<MotivicClass> sigma_motivic(const MotivicClass &a, std::size_t order);

/// sigma_P(t) = prod_{p,q} (1 - u^p v^q t)^{-e^{p,q}}.
std::vector<EPolynomial> sigma_epoly(const EPolynomial &p, std::size_t order);

/// Euler characteristic: every power of L maps to 1.
Integer euler_spec(const MotivicClass &a);

/// Hodge-Deligne realisation: L^e maps to (uv)^e.
EPolynomial hodge_spec(const MotivicClass &a);

/// Per-ring data: units, zero test, printing and the pre-lambda sigma.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Integer> {
    static constexpr const char *name = "integer";
    static Integer zero() { return 0; }
    static Integer one() { return 1; }
    static bool is_zero(const Integer &a) { return a == 0; }
    static std::string to_string(const Integer &a) { return a.get_str(); }
    static std::vector<Integer> sigma(const Integer &a, std::size_t order) { return sigma_int(a, order); }
};

template <>
struct ring_traits<MotivicClass> {
    static constexpr const char *name = "motivic";
    static MotivicClass zero() { return {}; }
    static MotivicClass one() { return 1L; }
    static bool is_zero(const MotivicClass &a) { return a.is_zero(); }
    static std::string to_string(const MotivicClass &a) { return powerstruct::to_string(a); }
    static std::vector<MotivicClass> sigma(const MotivicClass &a, std::size_t order) { return sigma_motivic(a, order); }
};

template <>
struct ring_traits<EPolynomial> {
    static constexpr const char *name = "epoly";
    static EPolynomial zero() { return {}; }
    static EPolynomial one() { return 1L; }
    static bool is_zero(const EPolynomial &a) { return a.is_zero(); }
    static std::string to_string(const EPolynomial &a) { return powerstruct::to_string(a); }
    static std::vector<EPolynomial> sigma(const EPolynomial &a, std::size_t order) { return sigma_epoly(a, order); }
};

/// A commutative ring with a pre-lambda structure sigma_a(t), sigma_{a+b} = sigma_a sigma_b.
template <class R>
concept PreLambdaRing = std::regular<R> && requires(R a, const R &b, std::size_t n) {
    { ring_traits<R>::zero() } -> std::same_as<R>;
    { ring_traits<R>::one() } -> std::same_as<R>;
    { ring_traits<R>::is_zero(b) } -> std::convertible_to<bool>;
    { ring_traits<R>::to_string(b) } -> std::convertible_to<std::string>;
    { ring_traits<R>::sigma(b, n) } -> std::same_as<std::vector<R>>;
    { a += b };
    { a -= b };
    { R(b * b) };
    { R(-b) };
};

} // namespace powerstruct
