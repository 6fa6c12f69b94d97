#pragma once

#include <powerstruct/config_oracle.hpp>
#include <powerstruct/motivic.hpp>
#include <powerstruct/orbifold.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

/// JSON encodings of the library types. Coefficients, exponents of L, sizes and
/// counts are decimal strings (readers also accept plain JSON integers);
/// multi-index exponents and bounds are JSON integers. Readers throw ParseError
/// on malformed documents and ContractError on well-formed but invalid data.
namespace powerstruct::json {

using nlohmann::json;

json to_json(const Rational &q);
Rational rational_from_json(const json &j);

json to_json(const Integer &z);
Integer integer_from_json(const json &j);

/// {"terms":[{"e":"p/q","c":"<int>"}]}, terms in increasing exponent order.
json to_json(const MotivicClass &a);
/// Also accepts a class literal string such as "1+L^{1/2}".
MotivicClass class_from_json(const json &j);

/// {"terms":[{"p":"p/q","q":"p/q","c":"<int>"}]}.
json to_json(const EPolynomial &p);
EPolynomial epoly_from_json(const json &j);

template <class R>
R element_from_json(const json &j);
template <>
inline Integer element_from_json<Integer>(const json &j) { return integer_from_json(j); }
template <>
inline MotivicClass element_from_json<MotivicClass>(const json &j) { return class_from_json(j); }
template <>
inline EPolynomial element_from_json<EPolynomial>(const json &j) { return epoly_from_json(j); }

/// Variable names t1..tr.
std::vector<std::string> default_variables(std::size_t count);

/// {"vars":[...],"bounds":[...],"coeffs":[{"exp":[...],"val":...}]}: nonzero
/// coefficients in graded-lex order, the constant term always present.
template <PreLambdaRing R>
json to_json(const TruncatedSeries<R> &s)
{
    json coeffs = json::array();
    const BoxShape &box = s.shape();
    for (std::size_t idx : box.graded_lex_indices()) {
        if (idx != 0 && ring_traits<R>::is_zero(s.at_index(idx))) continue;
        coeffs.push_back({{"exp", box.exponent_at(idx).entries()}, {"val", to_json(s.at_index(idx))}});
    }
    return {{"vars", default_variables(s.var_count())}, {"bounds", s.bounds()}, {"coeffs", std::move(coeffs)}};
}

BoxShape shape_from_json(const json &j);

template <PreLambdaRing R>
TruncatedSeries<R> series_from_json(const json &j)
{
    TruncatedSeries<R> s(shape_from_json(j));
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("series JSON: missing \"coeffs\" array");
    for (const json &term : j["coeffs"]) {
        if (!term.contains("exp") || !term.contains("val")) throw ParseError("series JSON: coefficient needs \"exp\" and \"val\"");
        std::vector<std::uint32_t> exp;
        try {
            exp = term["exp"].get<std::vector<std::uint32_t>>();
        } catch (const nlohmann::json::exception &) {
            throw ParseError("series JSON: \"exp\" must be an array of non-negative integers");
        }
        const ExponentVector n(std::move(exp));
        if (n.size() != s.var_count()) throw ParseError("series JSON: exponent " + n.to_string() + " has wrong length");
        if (!s.shape().contains(n)) throw ParseError("series JSON: exponent " + n.to_string() + " outside the bounds");
        s.set(n, element_from_json<R>(term["val"]));
    }
    return s;
}

enum class RingKind { integer, motivic, epoly };

/// Ring of a series document, judged from its coefficient values; a series
/// without decisive values is motivic.
RingKind detect_ring(const json &series);

json to_json(const LocalSeriesData &local);
LocalSeriesData local_data_from_json(const json &j);

json to_json(const OrbifoldDatum &d);
OrbifoldDatum orbifold_datum_from_json(const json &j);

/// Permutations are written 1-based: "perm":[2,1] swaps two points.
json to_json(const FiniteGroupAction &action);
FiniteGroupAction group_action_from_json(const json &j);

/// {"m":"<int>","vars":[...],"parts":[{"exp":[...],"val":"<int>"}]}.
json to_json(const FiniteCoefficientData &data);
FiniteCoefficientData coefficient_data_from_json(const json &j);

/// {"slots":{"hilb":<series>, ...}} keyed by NestedPackage::slot_names.
json to_json(const NestedPackage &pkg);

json to_json(const AxiomReport &report);
json to_json(const ConfigCheckReport &report);
json to_json(const WreathCheckReport &report);
json to_json(const WreathType &type);

/// Parses text, turning syntax errors into ParseError.
json parse_document(const std::string &text);

} // namespace powerstruct::json
