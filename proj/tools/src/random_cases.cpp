#include "random_cases.hpp"

#include <algorithm>

namespace powerstruct::cli {

CaseGenerator::CaseGenerator(std::uint64_t seed, std::uint32_t max_order, std::uint32_t max_vars)
    : rng_(seed), max_order_(std::max<std::uint32_t>(max_order, 1)), max_vars_(std::clamp<std::uint32_t>(max_vars, 1, 3))
{
}

int CaseGenerator::small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

BoxShape CaseGenerator::box()
{
    const auto vars = static_cast<std::uint32_t>(small(1, static_cast<int>(max_vars_)));
    // keep multivariate boxes small: r = 2 up to 3 per variable, r = 3 up to 2
    const std::uint32_t cap = vars == 1 ? max_order_ : std::min<std::uint32_t>(max_order_, vars == 2 ? 3 : 2);
    std::vector<std::uint32_t> bounds(vars);
    for (auto &b : bounds) b = static_cast<std::uint32_t>(small(1, static_cast<int>(cap)));
    return BoxShape(std::move(bounds));
}

Integer CaseGenerator::integer_element() { return small(-3, 3); }

MotivicClass CaseGenerator::motivic_element()
{
    static const Rational exponents[] = {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    MotivicClass a;
    const int terms = small(0, 3);
    for (int i = 0; i < terms; ++i) a += lefschetz(exponents[small(0, 4)], small(-2, 2));
    return a;
}

EPolynomial CaseGenerator::epoly_element()
{
    EPolynomial p;
    const int terms = small(0, 3);
    for (int i = 0; i < terms; ++i) p += hodge_monomial(small(0, 2), small(0, 2), small(-2, 2));
    return p;
}

template <>
Integer CaseGenerator::element<Integer>()
{
    return integer_element();
}
template <>
MotivicClass CaseGenerator::element<MotivicClass>()
{
    return motivic_element();
}
template <>
EPolynomial CaseGenerator::element<EPolynomial>()
{
    return epoly_element();
}

template <PreLambdaRing R>
TruncatedSeries<R> CaseGenerator::unit_series(const BoxShape &shape)
{
    TruncatedSeries<R> s = TruncatedSeries<R>::one(shape);
    for (std::size_t idx = 1; idx < shape.size(); ++idx) {
        if (small(0, 2) != 0) s.set_index(idx, element<R>());
    }
    return s;
}

template <PreLambdaRing R>
std::vector<AxiomCase<R>> CaseGenerator::cases(std::size_t count)
{
    std::vector<AxiomCase<R>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const BoxShape shape = box();
        AxiomCase<R> c{unit_series<R>(shape), unit_series<R>(shape), element<R>(), element<R>(), static_cast<std::uint32_t>(small(2, 3))};
        out.push_back(std::move(c));
    }
    return out;
}

template std::vector<AxiomCase<Integer>> CaseGenerator::cases<Integer>(std::size_t);
template std::vector<AxiomCase<MotivicClass>> CaseGenerator::cases<MotivicClass>(std::size_t);
template std::vector<AxiomCase<EPolynomial>> CaseGenerator::cases<EPolynomial>(std::size_t);

} // namespace powerstruct::cli
