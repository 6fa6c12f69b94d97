#pragma once

#include <powerstruct/power.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace powerstruct::cli {

/// Seeded generator of axiom-check inputs: unit-constant series in 1 to
/// max_vars variables with small coefficients, and small exponents.
class CaseGenerator {
public:
    CaseGenerator(std::uint64_t seed, std::uint32_t max_order, std::uint32_t max_vars);

    template <PreLambdaRing R>
    std::vector<AxiomCase<R>> cases(std::size_t count);

private:
    BoxShape box();
    int small(int lo, int hi);
    Integer integer_element();
    MotivicClass motivic_element();
    EPolynomial epoly_element();

    template <PreLambdaRing R>
    R element();

    template <PreLambdaRing R>
    TruncatedSeries<R> unit_series(const BoxShape &shape);

    std::mt19937_64 rng_;
    std::uint32_t max_order_;
    std::uint32_t max_vars_;
};

} // namespace powerstruct::cli
