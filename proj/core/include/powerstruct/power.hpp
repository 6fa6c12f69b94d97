#pragma once

#include <powerstruct/series.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace powerstruct {

/// A(t)^m for any ring element m.
///
/// Factorizes A = prod (1 - t^k)^{-b_k}, scales every exponent by m and
/// reassembles. This is the only code path; integer m is not special-cased.
template <PreLambdaRing R>
TruncatedSeries<R> power(const TruncatedSeries<R> &a, const R &m)
{
    Factorization<R> f = factorize(a);
    for (auto it = f.exponents.begin(); it != f.exponents.end();) {
        it->second = R(it->second * m);
        if (ring_traits<R>::is_zero(it->second)) {
            it = f.exponents.erase(it);
        } else {
            ++it;
        }
    }
    return assemble(f);
}

enum class Specialization { none, euler, hodge };

Specialization parse_specialization(const std::string &name);

/// Coefficientwise Euler characteristic (L -> 1).
IntegerSeries specialize_euler(const MotivicSeries &a);
/// Coefficientwise Hodge-Deligne realisation (L -> uv).
EPolySeries specialize_hodge(const MotivicSeries &a);

/// One input tuple for the power-structure axiom check.
template <PreLambdaRing R>
struct AxiomCase {
    TruncatedSeries<R> a;
    TruncatedSeries<R> b;
    R m;
    R n;
    std::uint32_t k = 2;
};

struct PropertyResult {
    int property = 0;
    std::string statement;
    std::size_t checks = 0;
    bool passed = true;
    /// First failing coefficient, empty when passed.
    std::string counterexample;
};

struct AxiomReport {
    std::vector<PropertyResult> properties;

    [[nodiscard]] bool all_passed() const;
};

namespace detail {

AxiomReport empty_axiom_report();

template <PreLambdaRing R>
void record(PropertyResult &p, const TruncatedSeries<R> &lhs, const TruncatedSeries<R> &rhs, std::size_t case_index)
{
    ++p.checks;
    if (lhs == rhs || !p.passed) return;
    p.passed = false;
    if (!(lhs.shape() == rhs.shape())) {
        p.counterexample = "case " + std::to_string(case_index) + ": boxes differ";
        return;
    }
    for (std::size_t idx : lhs.shape().graded_lex_indices()) {
        if (!(lhs.at_index(idx) == rhs.at_index(idx))) {
            p.counterexample = "case " + std::to_string(case_index) + " at " + lhs.shape().exponent_at(idx).to_string() +
                               ": lhs=" + ring_traits<R>::to_string(lhs.at_index(idx)) +
                               " rhs=" + ring_traits<R>::to_string(rhs.at_index(idx));
            return;
        }
    }
}

} // namespace detail

/// Checks power-structure properties 1)-7) coefficientwise inside each case's box:
///   1) A^0 = 1            2) A^1 = A            3) (AB)^m = A^m B^m
///   4) A^{m+n} = A^m A^n  5) A^{mn} = (A^n)^m  6) (1+t_v)^m = 1 + m t_v + ...
///   7) (A(t^k))^m = A^m |_{t -> t^k}
template <PreLambdaRing R>
AxiomReport verify_axioms(std::span<const AxiomCase<R>> cases)
{
    AxiomReport report = detail::empty_axiom_report();
    auto &p = report.properties;
    const R zero = ring_traits<R>::zero();
    const R one = ring_traits<R>::one();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const AxiomCase<R> &c = cases[i];
        const BoxShape &box = c.a.shape();
        const auto unit = TruncatedSeries<R>::one(box);
        const auto am = power(c.a, c.m);
        const auto an = power(c.a, c.n);

        detail::record(p[0], power(c.a, zero), unit, i);
        detail::record(p[1], power(c.a, one), c.a, i);
        detail::record(p[2], power(c.a * c.b, c.m), am * power(c.b, c.m), i);
        detail::record(p[3], power(c.a, R(c.m + c.n)), am * an, i);
        detail::record(p[4], power(c.a, R(c.m * c.n)), power(an, c.m), i);

        for (std::size_t v = 0; v < box.var_count(); ++v) {
            if (box.bound(v) == 0) continue;
            ExponentVector ev(box.var_count());
            ev[v] = 1;
            auto binomial = unit;
            binomial.set(ev, one);
            const auto lhs = power(binomial, c.m);
            // only the 1-jet is prescribed
            auto jet = TruncatedSeries<R>(box);
            jet.set_index(0, lhs.constant_term());
            jet.set(ev, lhs.coeff(ev));
            auto expected = unit;
            expected.set(ev, c.m);
            detail::record(p[5], jet, expected, i);
        }

        detail::record(p[6], power(substitute_power(c.a, c.k), c.m), substitute_power(am, c.k), i);
    }
    return report;
}

template <PreLambdaRing R>
AxiomReport verify_axioms(const std::vector<AxiomCase<R>> &cases)
{
    return verify_axioms(std::span<const AxiomCase<R>>(cases));
}

} // namespace powerstruct
