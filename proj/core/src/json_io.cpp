#include <powerstruct/json_io.hpp>

#include <limits>

namespace powerstruct::json {

namespace {

const json &field(const json &j, const char *key, const char *what)
{
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + " JSON: missing \"" + key + "\"");
    return j.at(key);
}

std::uint64_t unsigned_from_json(const json &j, const char *what)
{
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer()) {
        if (j.get<std::int64_t>() < 0) throw ParseError(std::string(what) + ": expected a non-negative integer");
        return static_cast<std::uint64_t>(j.get<std::int64_t>());
    }
    const Integer z = integer_from_json(j);
    if (z < 0 || !z.fits_ulong_p()) throw ParseError(std::string(what) + ": expected a non-negative machine-size integer");
    return z.get_ui();
}

std::uint32_t u32_from_json(const json &j, const char *what)
{
    const std::uint64_t v = unsigned_from_json(j, what);
    if (v > std::numeric_limits<std::uint32_t>::max()) throw ParseError(std::string(what) + ": value too large");
    return static_cast<std::uint32_t>(v);
}

json size_string(std::uint64_t v) { return std::to_string(v); }

} // namespace

json to_json(const Rational &q) { return q.to_string(); }

Rational rational_from_json(const json &j)
{
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw ParseError("rational JSON: expected a \"p/q\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::overflow_error &e) {
        throw ParseError(std::string("rational JSON: ") + e.what());
    }
}

json to_json(const Integer &z) { return z.get_str(); }

Integer integer_from_json(const json &j)
{
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (!j.is_string()) throw ParseError("integer JSON: expected a decimal string");
    const std::string text = j.get<std::string>();
    const std::size_t start = !text.empty() && (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos) {
        throw ParseError("integer JSON: '" + text + "' is not a decimal integer");
    }
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

json to_json(const MotivicClass &a)
{
    json terms = json::array();
    for (const auto &[e, c] : a.terms()) terms.push_back({{"e", to_json(e)}, {"c", to_json(c)}});
    return {{"terms", std::move(terms)}};
}

MotivicClass class_from_json(const json &j)
{
    if (j.is_string()) return parse_class(j.get<std::string>());
    if (j.is_number_integer()) return MotivicClass(integer_from_json(j));
    const json &terms = field(j, "terms", "class");
    if (!terms.is_array()) throw ParseError("class JSON: \"terms\" must be an array");
    MotivicClass out;
    for (const json &t : terms) out += lefschetz(rational_from_json(field(t, "e", "class term")), integer_from_json(field(t, "c", "class term")));
    return out;
}

json to_json(const EPolynomial &p)
{
    json terms = json::array();
    for (const auto &[e, c] : p.terms()) terms.push_back({{"p", to_json(e.u)}, {"q", to_json(e.v)}, {"c", to_json(c)}});
    return {{"terms", std::move(terms)}};
}

EPolynomial epoly_from_json(const json &j)
{
    if (j.is_number_integer() || j.is_string()) return EPolynomial(integer_from_json(j));
    const json &terms = field(j, "terms", "E-polynomial");
    if (!terms.is_array()) throw ParseError("E-polynomial JSON: \"terms\" must be an array");
    EPolynomial out;
    for (const json &t : terms) {
        out += hodge_monomial(rational_from_json(field(t, "p", "E-polynomial term")), rational_from_json(field(t, "q", "E-polynomial term")),
                              integer_from_json(field(t, "c", "E-polynomial term")));
    }
    return out;
}

std::vector<std::string> default_variables(std::size_t count)
{
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= count; ++i) vars.push_back("t" + std::to_string(i));
    return vars;
}

BoxShape shape_from_json(const json &j)
{
    const json &bounds = field(j, "bounds", "series");
    if (!bounds.is_array() || bounds.empty()) throw ParseError("series JSON: \"bounds\" must be a non-empty array");
    std::vector<std::uint32_t> b;
    for (const json &v : bounds) b.push_back(u32_from_json(v, "series bound"));
    if (j.contains("vars") && (!j["vars"].is_array() || j["vars"].size() != b.size())) {
        throw ParseError("series JSON: \"vars\" and \"bounds\" differ in length");
    }
    return BoxShape(std::move(b));
}

RingKind detect_ring(const json &series)
{
    const json &coeffs = field(series, "coeffs", "series");
    if (!coeffs.is_array()) throw ParseError("series JSON: \"coeffs\" must be an array");
    for (const json &term : coeffs) {
        if (!term.is_object() || !term.contains("val")) continue;
        const json &val = term["val"];
        if (val.is_string() || val.is_number()) return RingKind::integer;
        if (!val.is_object() || !val.contains("terms")) continue;
        for (const json &t : val["terms"]) {
            if (t.contains("e")) return RingKind::motivic;
            if (t.contains("p") || t.contains("q")) return RingKind::epoly;
        }
    }
    return RingKind::motivic;
}

json to_json(const LocalSeriesData &local)
{
    json j = {{"dimension", size_string(local.dimension)}, {"hilbLocal", to_json(local.hilb_local)}};
    if (local.pair_local) j["pairLocal"] = to_json(*local.pair_local);
    if (local.nested_local) j["nestedLocal"] = to_json(*local.nested_local);
    return j;
}

LocalSeriesData local_data_from_json(const json &j)
{
    LocalSeriesData local;
    local.dimension = u32_from_json(field(j, "dimension", "local data"), "local data dimension");
    local.hilb_local = series_from_json<MotivicClass>(field(j, "hilbLocal", "local data"));
    if (j.contains("pairLocal")) local.pair_local = series_from_json<MotivicClass>(j["pairLocal"]);
    if (j.contains("nestedLocal")) local.nested_local = series_from_json<MotivicClass>(j["nestedLocal"]);
    local.validate();
    return local;
}

json to_json(const OrbifoldDatum &d)
{
    json classes = json::array();
    for (const auto &cls : d.classes) {
        json comps = json::array();
        for (const FixedComponent &c : cls) comps.push_back({{"class", to_json(c.component)}, {"shift", to_json(c.shift)}});
        classes.push_back(std::move(comps));
    }
    return {{"m", size_string(d.group_order)}, {"d", size_string(d.dimension)}, {"classes", std::move(classes)}};
}

OrbifoldDatum orbifold_datum_from_json(const json &j)
{
    OrbifoldDatum d;
    d.group_order = u32_from_json(field(j, "m", "orbifold datum"), "orbifold datum m");
    d.dimension = u32_from_json(field(j, "d", "orbifold datum"), "orbifold datum d");
    const json &classes = field(j, "classes", "orbifold datum");
    if (!classes.is_array()) throw ParseError("orbifold datum JSON: \"classes\" must be an array");
    for (const json &cls : classes) {
        if (!cls.is_array()) throw ParseError("orbifold datum JSON: each class must be an array of components");
        std::vector<FixedComponent> comps;
        for (const json &c : cls) {
            comps.push_back({class_from_json(field(c, "class", "fixed component")), rational_from_json(field(c, "shift", "fixed component"))});
        }
        d.classes.push_back(std::move(comps));
    }
    d.validate();
    return d;
}

json to_json(const FiniteGroupAction &action)
{
    json elements = json::array();
    for (const auto &e : action.elements()) {
        std::vector<std::uint32_t> perm;
        for (std::uint32_t x : e.perm) perm.push_back(x + 1);
        elements.push_back({{"label", e.label}, {"perm", std::move(perm)}});
    }
    return {{"x_size", size_string(action.x_size())}, {"elements", std::move(elements)}};
}

FiniteGroupAction group_action_from_json(const json &j)
{
    const std::uint32_t x_size = u32_from_json(field(j, "x_size", "group action"), "group action x_size");
    const json &elements = field(j, "elements", "group action");
    if (!elements.is_array()) throw ParseError("group action JSON: \"elements\" must be an array");
    std::vector<FiniteGroupAction::Element> out;
    for (const json &e : elements) {
        FiniteGroupAction::Element el;
        el.label = e.contains("label") && e["label"].is_string() ? e["label"].get<std::string>() : "g" + std::to_string(out.size());
        const json &perm = field(e, "perm", "group element");
        if (!perm.is_array()) throw ParseError("group action JSON: \"perm\" must be an array");
        for (const json &x : perm) {
            const std::uint32_t image = u32_from_json(x, "permutation entry");
            if (image == 0) throw ParseError("group action JSON: permutation entries are 1-based");
            el.perm.push_back(image - 1);
        }
        out.push_back(std::move(el));
    }
    return FiniteGroupAction(x_size, std::move(out));
}

json to_json(const FiniteCoefficientData &data)
{
    json parts = json::array();
    for (const auto &[i, a] : data.parts) parts.push_back({{"exp", i.entries()}, {"val", size_string(a)}});
    return {{"m", size_string(data.m_size)}, {"vars", default_variables(data.var_count)}, {"parts", std::move(parts)}};
}

FiniteCoefficientData coefficient_data_from_json(const json &j)
{
    FiniteCoefficientData data;
    data.m_size = unsigned_from_json(field(j, "m", "coefficient data"), "coefficient data m");
    const json &vars = field(j, "vars", "coefficient data");
    if (!vars.is_array() || vars.empty()) throw ParseError("coefficient data JSON: \"vars\" must be a non-empty array");
    data.var_count = static_cast<std::uint32_t>(vars.size());
    const json &parts = field(j, "parts", "coefficient data");
    if (!parts.is_array()) throw ParseError("coefficient data JSON: \"parts\" must be an array");
    for (const json &p : parts) {
        std::vector<std::uint32_t> exp;
        for (const json &v : field(p, "exp", "coefficient part")) exp.push_back(u32_from_json(v, "part exponent"));
        ExponentVector i(std::move(exp));
        const std::uint64_t a = unsigned_from_json(field(p, "val", "coefficient part"), "part size");
        if (!data.parts.emplace(i, a).second) throw ParseError("coefficient data JSON: repeated part " + i.to_string());
    }
    try {
        data.validate();
    } catch (const ContractError &e) {
        throw ParseError(e.what());
    }
    return data;
}

json to_json(const NestedPackage &pkg)
{
    json slots = json::object();
    for (std::size_t i = 0; i < pkg.slots.size(); ++i) slots[std::string(NestedPackage::slot_names[i])] = to_json(pkg.slots[i]);
    return {{"slots", std::move(slots)}};
}

json to_json(const AxiomReport &report)
{
    json props = json::array();
    for (const PropertyResult &p : report.properties) {
        json row = {{"property", std::to_string(p.property)}, {"statement", p.statement}, {"checks", size_string(p.checks)}, {"passed", p.passed}};
        if (!p.passed) row["counterexample"] = p.counterexample;
        props.push_back(std::move(row));
    }
    return {{"passed", report.all_passed()}, {"properties", std::move(props)}};
}

json to_json(const ConfigCheckReport &report)
{
    json rows = json::array();
    for (const ConfigCheckRow &r : report.rows) {
        json row = {{"n", r.n.entries()}, {"configurations", to_json(r.configurations)}, {"closedForm", to_json(r.closed_form)}, {"engine", to_json(r.engine)}};
        if (r.naive) row["naive"] = to_json(*r.naive);
        rows.push_back(std::move(row));
    }
    json j = {{"passed", report.passed}, {"rows", std::move(rows)}};
    if (!report.passed) j["firstMismatch"] = report.first_mismatch;
    return j;
}

json to_json(const WreathCheckReport &report)
{
    json rows = json::array();
    for (const WreathCheckRow &r : report.rows) {
        rows.push_back({{"n", size_string(r.n)},
                        {"oracle", to_json(r.oracle)},
                        {"series", to_json(r.series)},
                        {"conjugacyClasses", size_string(r.conjugacy_classes)},
                        {"types", size_string(r.types)},
                        {"typesConsistent", r.types_consistent},
                        {"passed", r.passed()}});
    }
    json j = {{"passed", report.passed}, {"rows", std::move(rows)}};
    if (report.refused_from != 0) j["refusedFrom"] = size_string(report.refused_from);
    if (!report.passed) j["firstMismatch"] = report.first_mismatch;
    return j;
}

json to_json(const WreathType &type)
{
    json j = json::array();
    for (const auto &[cls, parts] : type) {
        json lengths = json::array();
        for (std::uint32_t p : parts) lengths.push_back(size_string(p));
        j.push_back({{"class", size_string(cls)}, {"partition", std::move(lengths)}});
    }
    return j;
}

json parse_document(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace powerstruct::json
