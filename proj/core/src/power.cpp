#include <powerstruct/power.hpp>

#include <algorithm>

namespace powerstruct {

Specialization parse_specialization(const std::string &name)
{
    if (name == "none") return Specialization::none;
    if (name == "euler") return Specialization::euler;
    if (name == "hodge") return Specialization::hodge;
    throw ParseError("unknown specialization '" + name + "' (expected none, euler or hodge)");
}

IntegerSeries specialize_euler(const MotivicSeries &a)
{
    return map_coefficients<Integer>(a, [](const MotivicClass &c) { return euler_spec(c); });
}

EPolySeries specialize_hodge(const MotivicSeries &a)
{
    return map_coefficients<EPolynomial>(a, [](const MotivicClass &c) { return hodge_spec(c); });
}

bool AxiomReport::all_passed() const
{
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult &p) { return p.passed; });
}

AxiomReport detail::empty_axiom_report()
{
    AxiomReport r;
    const char *statements[] = {
        "A^0 = 1",
        "A^1 = A",
        "(AB)^m = A^m B^m",
        "A^(m+n) = A^m A^n",
        "A^(mn) = (A^n)^m",
        "(1+t)^m = 1 + m t + O(t^2)",
        "(A(t^k))^m = A^m(t^k)",
    };
    for (int i = 0; i < 7; ++i) r.properties.push_back(PropertyResult{i + 1, statements[i], 0, true, {}});
    return r;
}

} // namespace powerstruct
