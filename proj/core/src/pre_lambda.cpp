#include <powerstruct/pre_lambda.hpp>

namespace powerstruct {

namespace {

// prod over terms c x^e of (1 - x^e t)^{-c}, expanded through t^order.
template <class Key>
std::vector<SparsePoly<Key>> sigma_sparse(const SparsePoly<Key> &a, std::size_t order)
{
    using Poly = SparsePoly<Key>;
    std::vector<Poly> acc(order + 1);
    acc[0] = Poly(1L);
    for (const auto &[e, c] : a.terms()) {
        // factor_j = multichoose(c, j) x^{j e}
        std::vector<std::pair<Key, Integer>> factor;
        Key shift{};
        for (std::size_t j = 0; j <= order; ++j) {
            Integer coef = multichoose(c, j);
            if (coef == 0) break;
            factor.emplace_back(shift, std::move(coef));
            shift = shift + e;
        }
        std::vector<Poly> next(order + 1);
        for (std::size_t n = 0; n <= order; ++n) {
            if (acc[n].is_zero()) continue;
            for (std::size_t j = 0; j < factor.size() && n + j <= order; ++j) {
                next[n + j] += acc[n].shifted(factor[j].first, factor[j].second);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace

std::vector<Integer> sigma_int(const Integer &k, std::size_t order)
{
    std::vector<Integer> out(order + 1);
    for (std::size_t j = 0; j <= order; ++j) out[j] = multichoose(k, j);
    return out;
}

std::vector<MotivicClass> sigma_motivic(const MotivicClass &a, std::size_t order) { return sigma_sparse(a, order); }

std::vector<EPolynomial> sigma_epoly(const EPolynomial &p, std::size_t order) { return sigma_sparse(p, order); }

Integer euler_spec(const MotivicClass &a)
{
    Integer sum = 0;
    for (const auto &t : a.terms()) sum += t.second;
    return sum;
}

EPolynomial hodge_spec(const MotivicClass &a)
{
    std::vector<EPolynomial::term_type> terms;
    terms.reserve(a.size());
    for (const auto &[e, c] : a.terms()) terms.emplace_back(HodgeExponent{e, e}, c);
    return EPolynomial::from_terms(std::move(terms));
}

} // namespace powerstruct
