#pragma once

#include "printers.hpp"

#include <powerstruct/orbifold.hpp>
#include <powerstruct/power.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace powerstruct::testing {

/// splitmix64: small, seedable, identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin(unsigned percent_true = 50) { return next() % 100 < percent_true; }

private:
    std::uint64_t state_;
};

Integer random_integer(Rng &rng, long magnitude = 3);
/// Up to `max_terms` terms with exponents in {-1, 0, 1/2, 1, 3/2, 2} and small coefficients.
MotivicClass random_class(Rng &rng, int max_terms = 3);
/// Up to `max_terms` terms u^p v^q with p, q in {0, 1/2, 1, 2}.
EPolynomial random_epoly(Rng &rng, int max_terms = 3);
/// Valid datum: |G| in [1, 4], d in [1, 3], up to three classes with up to two
/// components each, shifts drawn from (1/m)Z in [0, d).
OrbifoldDatum random_orbifold_datum(Rng &rng);
/// 1 to max_vars variables, bounds in [1, max_bound].
BoxShape random_box(Rng &rng, std::uint32_t max_vars, std::uint32_t max_bound);

template <class R>
R random_element(Rng &rng);
template <>
inline Integer random_element<Integer>(Rng &rng) { return random_integer(rng); }
template <>
inline MotivicClass random_element<MotivicClass>(Rng &rng) { return random_class(rng); }
template <>
inline EPolynomial random_element<EPolynomial>(Rng &rng) { return random_epoly(rng); }

/// Unit constant term, roughly two thirds of the other coefficients nonzero.
template <PreLambdaRing R>
TruncatedSeries<R> random_unit_series(Rng &rng, const BoxShape &box)
{
    TruncatedSeries<R> s = TruncatedSeries<R>::one(box);
    for (std::size_t idx = 1; idx < box.size(); ++idx) {
        if (rng.uniform(0, 2) != 0) s.set_index(idx, random_element<R>(rng));
    }
    return s;
}

template <PreLambdaRing R>
Factorization<R> random_factorization(Rng &rng, const BoxShape &box)
{
    Factorization<R> f(box);
    for (std::size_t idx = 1; idx < box.size(); ++idx) {
        if (!rng.coin(60)) continue;
        R b = random_element<R>(rng);
        if (!ring_traits<R>::is_zero(b)) f.exponents.emplace(box.exponent_at(idx), std::move(b));
    }
    return f;
}

/// Sparse map form of a series, independent of the dense storage.
template <class R>
using TermMap = std::map<std::vector<std::uint32_t>, R>;

template <PreLambdaRing R>
TermMap<R> term_map(const TruncatedSeries<R> &s)
{
    TermMap<R> out;
    for (const auto &[n, c] : s.terms()) out.emplace(n.entries(), c);
    return out;
}

template <PreLambdaRing R>
TruncatedSeries<R> from_term_map(const TermMap<R> &m, const BoxShape &box)
{
    TruncatedSeries<R> s(box);
    for (const auto &[n, c] : m) s.set(ExponentVector(n), c);
    return s;
}

/// Schoolbook product over the term maps with an explicit box test.
template <PreLambdaRing R>
TruncatedSeries<R> naive_mul(const TruncatedSeries<R> &a, const TruncatedSeries<R> &b)
{
    const auto &bounds = a.bounds();
    TermMap<R> out;
    for (const auto &[ea, ca] : term_map(a)) {
        for (const auto &[eb, cb] : term_map(b)) {
            std::vector<std::uint32_t> e(ea.size());
            bool inside = true;
            for (std::size_t v = 0; v < e.size(); ++v) {
                e[v] = ea[v] + eb[v];
                inside = inside && e[v] <= bounds[v];
            }
            if (!inside) continue;
            auto [it, fresh] = out.emplace(e, R(ca * cb));
            if (!fresh) it->second += R(ca * cb);
        }
    }
    return from_term_map(out, a.shape());
}

/// Inverse by undetermined coefficients: visit exponents by increasing total
/// degree and solve c_n = -sum_{0 < k <= n} a_k c_{n-k}.
template <PreLambdaRing R>
TruncatedSeries<R> naive_inverse(const TruncatedSeries<R> &a)
{
    const BoxShape &box = a.shape();
    TruncatedSeries<R> c(box);
    const auto a_terms = term_map(a);
    for (std::size_t idx : box.graded_lex_indices()) {
        const ExponentVector n = box.exponent_at(idx);
        if (n.is_zero()) {
            c.set(n, ring_traits<R>::one());
            continue;
        }
        R acc = ring_traits<R>::zero();
        for (const auto &[k, ak] : a_terms) {
            const ExponentVector kv(k);
            if (kv.is_zero() || !kv.divides(n)) continue;
            std::vector<std::uint32_t> rest(n.size());
            for (std::size_t v = 0; v < rest.size(); ++v) rest[v] = n[v] - kv[v];
            acc += R(ak * c.coeff(ExponentVector(rest)));
        }
        c.set(n, R(-acc));
    }
    return c;
}

/// Ordinary k-th power by repeated schoolbook multiplication (k < 0 inverts first).
template <PreLambdaRing R>
TruncatedSeries<R> ordinary_power(const TruncatedSeries<R> &a, long k)
{
    const TruncatedSeries<R> base = k < 0 ? naive_inverse(a) : a;
    TruncatedSeries<R> out = TruncatedSeries<R>::one(a.shape());
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out = naive_mul(out, base);
    return out;
}

/// Partition numbers p(0..n) by direct recursive counting.
std::vector<long> partition_numbers(unsigned n);
/// Number of partitions of n into parts of size at most `max_part`.
long partitions_bounded(unsigned n, unsigned max_part);
/// Binomial coefficients from Pascal's triangle (exact for the small sizes used).
long pascal(long n, long k);
/// Coefficients of (1 - t)^{-k} for any integer k, from Pascal's rule.
std::vector<Integer> inverse_binomial_series(long k, unsigned order);

/// Sum over tuples (k_i) with sum_i i k_i = n of m! / ((m - sum k)! prod k_i!) prod a_i^{k_i},
/// enumerated by brute force over bounded k vectors (independent of the library evaluator).
Integer multinomial_oracle(long m, const std::map<std::vector<std::uint32_t>, long> &a, const std::vector<std::uint32_t> &n);

} // namespace powerstruct::testing
