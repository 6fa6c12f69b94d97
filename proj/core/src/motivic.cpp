#include <powerstruct/motivic.hpp>

namespace powerstruct {

namespace {

// The first `order`+1 coefficients of a univariate series, as a series of that order.
MotivicSeries fit_order(const MotivicSeries &s, std::uint32_t order, const char *what)
{
    if (s.var_count() != 1) throw ShapeMismatch(std::string(what) + ": expected a one-variable series");
    if (s.order() < order) {
        throw ContractError(std::string(what) + ": series of order " + std::to_string(s.order()) + " cannot be used at order " +
                            std::to_string(order));
    }
    return s.order() == order ? s : truncate_to(s, BoxShape::univariate(order));
}

void require_unit(const MotivicSeries &s, const char *what)
{
    if (!(s.constant_term() == ring_traits<MotivicClass>::one())) throw NonUnitConstant(what);
}

} // namespace

void LocalSeriesData::validate() const
{
    if (dimension == 0) throw ContractError("local data: dimension must be positive");
    if (hilb_local.var_count() != 1) throw ShapeMismatch("local data: hilbLocal must be a one-variable series");
    require_unit(hilb_local, "local data hilbLocal");
    if (pair_local && pair_local->var_count() != 1) throw ShapeMismatch("local data: pairLocal must be a one-variable series");
    if (nested_local) {
        require_unit(*nested_local, "local data nestedLocal");
        for (const auto &[n, c] : nested_local->terms()) {
            for (std::size_t i = 1; i < n.size(); ++i) {
                if (n[i - 1] > n[i]) throw ContractError("local data: nestedLocal has a term at non-monotone exponent " + n.to_string());
            }
        }
    }
}

const MotivicSeries &NestedPackage::slot(std::string_view name) const
{
    for (std::size_t i = 0; i < slot_names.size(); ++i) {
        if (slot_names[i] == name) return slots.at(i);
    }
    throw ContractError("unknown nested-package slot '" + std::string(name) + "'");
}

MotivicSeries kapranov_zeta(const MotivicClass &a, std::uint32_t order)
{
    return MotivicSeries::univariate(sigma_motivic(a, order));
}

MotivicSeries hilb_local_curve(std::uint32_t order)
{
    return MotivicSeries::univariate(std::vector<MotivicClass>(order + 1, MotivicClass(1L)));
}

MotivicSeries hilb_local_surface(std::uint32_t order)
{
    const BoxShape box = BoxShape::univariate(order);
    MotivicSeries out = MotivicSeries::one(box);
    std::vector<MotivicClass> geometric(order + 1, MotivicClass(1L));
    for (std::uint32_t k = 1; k <= order; ++k) {
        const MotivicClass weight = lefschetz(Rational(k - 1));
        out = out * substitute_scaled(std::span<const MotivicClass>(geometric), weight, ExponentVector{k}, box);
    }
    return out;
}

MotivicSeries hilb_local(unsigned dimension, std::uint32_t order)
{
    switch (dimension) {
    case 1:
        return hilb_local_curve(order);
    case 2:
        return hilb_local_surface(order);
    default:
        throw ContractError("punctual Hilbert series for dimension " + std::to_string(dimension) + " must be supplied as local data");
    }
}

MotivicSeries hilb_global(const MotivicClass &x, const MotivicSeries &local)
{
    if (local.var_count() != 1) throw ShapeMismatch("hilb_global: local series must be one-variable");
    return power(local, x);
}

MotivicSeries nested_global(const MotivicClass &x, const MotivicSeries &local) { return power(local, x); }

MotivicSeries nested_d1_local(const std::vector<std::uint32_t> &bounds)
{
    const BoxShape box(bounds);
    MotivicSeries out(box);
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
        const ExponentVector n = box.exponent_at(idx);
        bool monotone = true;
        for (std::size_t i = 1; i < n.size(); ++i) monotone = monotone && n[i - 1] <= n[i];
        if (monotone) out.set_index(idx, MotivicClass(1L));
    }
    return out;
}

MotivicSeries cheah_local_series(const LocalSeriesData &local, std::uint32_t order)
{
    local.validate();
    if (!local.pair_local) throw ContractError("cheah_main: local data lacks pairLocal");
    const MotivicSeries hilb = fit_order(local.hilb_local, order, "cheah_main hilbLocal");
    const MotivicSeries pair = fit_order(*local.pair_local, order, "cheah_main pairLocal");

    MotivicSeries f(BoxShape({order, 1, 1, 1}));
    for (std::uint32_t k = 0; k <= order; ++k) {
        const MotivicClass &h = hilb.coeff(k);
        const MotivicClass &p = pair.coeff(k);
        f.set({k, 0, 0, 0}, h);
        if (k >= 1) {
            f.set({k, 0, 0, 1}, p);
            f.set({k, 0, 1, 0}, h);
            f.set({k, 0, 1, 1}, p);
            f.set({k, 1, 0, 0}, h);
            f.set({k, 1, 1, 0}, h);
        }
        if (k >= 2) {
            f.set({k, 1, 0, 1}, p);
            f.set({k, 1, 1, 1}, p);
        }
    }
    return f;
}

NestedPackage cheah_main(const LocalSeriesData &local, const MotivicClass &x, std::uint32_t order)
{
    const MotivicSeries global = power(cheah_local_series(local, order), x);
    NestedPackage pkg;
    for (const auto &mono : NestedPackage::slot_monomials) {
        MotivicSeries s(BoxShape::univariate(order));
        for (std::uint32_t n = 0; n <= order; ++n) s.set(ExponentVector{n}, global.coeff({n, mono[0], mono[1], mono[2]}));
        pkg.slots.push_back(std::move(s));
    }
    return pkg;
}

MotivicSeries incidence_series(const MotivicClass &s, std::uint32_t order)
{
    const BoxShape box = BoxShape::univariate(order);
    // t / (1 - L t)
    MotivicSeries marked(box);
    for (std::uint32_t j = 1; j <= order; ++j) marked.set(ExponentVector{j}, lefschetz(Rational(j - 1)));
    return (marked * power(hilb_local_surface(order), s)).scaled(s);
}

MotivicSeries li_qin_series(const MotivicClass &s, const MotivicClass &x, const MotivicClass &c, const LocalSeriesData &local,
                            const MotivicSeries &m_local, std::uint32_t order)
{
    local.validate();
    const MotivicSeries hilb = fit_order(local.hilb_local, order, "li_qin hilbLocal");
    const MotivicSeries moduli = fit_order(m_local, order, "li_qin mLocal");
    require_unit(moduli, "li_qin mLocal");
    return (power(hilb, MotivicClass(x - c)) * power(moduli, c)).scaled(s);
}

} // namespace powerstruct
