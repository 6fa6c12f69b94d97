#pragma once

#include <powerstruct/errors.hpp>
#include <powerstruct/exponent.hpp>
#include <powerstruct/pre_lambda.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace powerstruct {

/// Multivariate power series over R truncated to a box {n : n_i <= N_i}.
///
/// Coefficients are stored densely over the box; terms() exposes the sparse
/// view. Box truncation is closed under products: the coefficient at n of AB
/// only involves coefficients of A and B at exponents <= n componentwise.
template <PreLambdaRing R>
class TruncatedSeries {
public:
    using ring_type = R;

    explicit TruncatedSeries(BoxShape shape) : shape_(std::move(shape)), coeffs_(shape_.size(), ring_traits<R>::zero()) {}

    static TruncatedSeries one(BoxShape shape) { return constant(std::move(shape), ring_traits<R>::one()); }

    static TruncatedSeries constant(BoxShape shape, R value)
    {
        TruncatedSeries s(std::move(shape));
        s.coeffs_[0] = std::move(value);
        return s;
    }

    /// One-variable series sum_j coeffs[j] t^j truncated at `order`; missing
    /// coefficients are zero.
    static TruncatedSeries univariate(std::span<const R> coeffs, std::uint32_t order)
    {
        TruncatedSeries s(BoxShape::univariate(order));
        for (std::size_t j = 0; j < coeffs.size() && j <= order; ++j) s.coeffs_[j] = coeffs[j];
        return s;
    }

    static TruncatedSeries univariate(const std::vector<R> &coeffs)
    {
        if (coeffs.empty()) throw ContractError("univariate series needs at least a constant term");
        return univariate(std::span<const R>(coeffs), static_cast<std::uint32_t>(coeffs.size() - 1));
    }

    [[nodiscard]] const BoxShape &shape() const noexcept { return shape_; }
    [[nodiscard]] std::size_t var_count() const noexcept { return shape_.var_count(); }
    [[nodiscard]] const std::vector<std::uint32_t> &bounds() const noexcept { return shape_.bounds(); }
    /// Truncation order of a one-variable series.
    [[nodiscard]] std::uint32_t order() const { return shape_.bound(0); }

    [[nodiscard]] const R &coeff(const ExponentVector &n) const { return coeffs_[shape_.index_of(n)]; }
    [[nodiscard]] const R &coeff(std::uint32_t j) const { return coeff(ExponentVector{j}); }
    [[nodiscard]] const R &at_index(std::size_t index) const { return coeffs_[index]; }
    [[nodiscard]] const R &constant_term() const { return coeffs_[0]; }

    void set(const ExponentVector &n, R value) { coeffs_[shape_.index_of(n)] = std::move(value); }
    void set_index(std::size_t index, R value) { coeffs_[index] = std::move(value); }

    /// Coefficient list of a one-variable series, entry j for t^j.
    [[nodiscard]] const std::vector<R> &univariate_coefficients() const
    {
        if (var_count() != 1) throw ShapeMismatch("series is not univariate");
        return coeffs_;
    }

    /// Nonzero terms in graded-lex order of exponents.
    [[nodiscard]] std::vector<std::pair<ExponentVector, R>> terms() const
    {
        std::vector<std::pair<ExponentVector, R>> out;
        for (std::size_t idx : shape_.graded_lex_indices()) {
            if (!ring_traits<R>::is_zero(coeffs_[idx])) out.emplace_back(shape_.exponent_at(idx), coeffs_[idx]);
        }
        return out;
    }

    [[nodiscard]] std::vector<std::size_t> nonzero_indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!ring_traits<R>::is_zero(coeffs_[i])) out.push_back(i);
        }
        return out;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &rhs)
    {
        require_same_shape(rhs, "add");
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &rhs)
    {
        require_same_shape(rhs, "subtract");
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries &rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries &rhs) { return lhs -= rhs; }

    TruncatedSeries operator-() const
    {
        TruncatedSeries out = *this;
        for (auto &c : out.coeffs_) c = R(-c);
        return out;
    }

    /// Every coefficient multiplied by a ring element.
    [[nodiscard]] TruncatedSeries scaled(const R &c) const
    {
        TruncatedSeries out(shape_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!ring_traits<R>::is_zero(coeffs_[i])) out.coeffs_[i] = R(coeffs_[i] * c);
        }
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        a.require_same_shape(b, "multiply");
        const BoxShape &box = a.shape_;
        const std::size_t r = box.var_count();
        const auto &bounds = box.bounds();

        const std::vector<std::size_t> nb = b.nonzero_indices();
        std::vector<std::uint32_t> eb(nb.size() * r);
        for (std::size_t j = 0; j < nb.size(); ++j) box.exponent_at(nb[j], eb.data() + j * r);

        TruncatedSeries out(box);
        std::vector<std::uint32_t> ea(r);
        for (std::size_t ia = 0; ia < a.coeffs_.size(); ++ia) {
            const R &ca = a.coeffs_[ia];
            if (ring_traits<R>::is_zero(ca)) continue;
            box.exponent_at(ia, ea.data());
            for (std::size_t j = 0; j < nb.size(); ++j) {
                const std::uint32_t *e = eb.data() + j * r;
                bool inside = true;
                for (std::size_t v = 0; v < r; ++v) {
                    if (ea[v] + e[v] > bounds[v]) {
                        inside = false;
                        break;
                    }
                }
                if (inside) out.coeffs_[ia + nb[j]] += ca * b.coeffs_[nb[j]];
            }
        }
        return out;
    }

    TruncatedSeries &operator*=(const TruncatedSeries &rhs) { return *this = *this * rhs; }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.shape_ == b.shape_ && a.coeffs_ == b.coeffs_;
    }

private:
    void require_same_shape(const TruncatedSeries &rhs, const char *op) const
    {
        if (!(shape_ == rhs.shape_)) {
            throw ShapeMismatch(std::string(op) + ": series boxes differ: " + shape_.to_string() + " vs " + rhs.shape_.to_string());
        }
    }

    BoxShape shape_;
    std::vector<R> coeffs_;
};

/// Exponent data b_k of A(t) = prod_{k != 0} (1 - t^k)^{-b_k}, keyed in graded-lex order.
template <PreLambdaRing R>
struct Factorization {
    explicit Factorization(BoxShape s) : shape(std::move(s)) {}

    BoxShape shape;
    std::map<ExponentVector, R, GradedLexLess> exponents;

    friend bool operator==(const Factorization &a, const Factorization &b)
    {
        return a.shape == b.shape && a.exponents == b.exponents;
    }
};

namespace detail {

// one-variable coefficients placed at j*k, weighted by (*scale)^j when scale is set
template <PreLambdaRing R>
TruncatedSeries<R> place_along(std::span<const R> coeffs, const R *scale, const ExponentVector &k, const BoxShape &target)
{
    if (k.is_zero()) throw ContractError("substitution exponent must be nonzero");
    const std::uint32_t reach = target.max_multiple(k);
    if (coeffs.size() < static_cast<std::size_t>(reach) + 1) {
        throw ContractError("series of order " + std::to_string(coeffs.size() - 1) + " is too short to fill box " + target.to_string() +
                            " along " + k.to_string());
    }
    TruncatedSeries<R> out(target);
    ExponentVector pos(target.var_count());
    R power = ring_traits<R>::one();
    for (std::uint32_t j = 0; j <= reach; ++j) {
        if (!ring_traits<R>::is_zero(coeffs[j])) out.set(pos, scale ? R(coeffs[j] * power) : coeffs[j]);
        if (scale) power = R(power * *scale);
        pos = pos + k;
    }
    return out;
}

} // namespace detail

/// A(c t^k) for a one-variable A, truncated to `target`: the coefficient a_j
/// lands at j*k with factor c^j. A must reach far enough to fill the box.
template <PreLambdaRing R>
TruncatedSeries<R> substitute_scaled(const TruncatedSeries<R> &a, const R &c, const ExponentVector &k, const BoxShape &target)
{
    const auto &coeffs = a.univariate_coefficients();
    return detail::place_along<R>(std::span<const R>(coeffs), &c, k, target);
}

/// Same as substitute_scaled with a raw coefficient list.
template <PreLambdaRing R>
TruncatedSeries<R> substitute_scaled(std::span<const R> coeffs, const R &c, const ExponentVector &k, const BoxShape &target)
{
    return detail::place_along<R>(coeffs, &c, k, target);
}

/// A(t_1^k, ..., t_r^k) within the same box.
template <PreLambdaRing R>
TruncatedSeries<R> substitute_power(const TruncatedSeries<R> &a, std::uint32_t k)
{
    if (k == 0) throw ContractError("substitute_power: k must be positive");
    TruncatedSeries<R> out(a.shape());
    for (std::size_t idx : a.nonzero_indices()) {
        const ExponentVector n = k * a.shape().exponent_at(idx);
        if (a.shape().contains(n)) out.set(n, a.at_index(idx));
    }
    return out;
}

/// Inverse of a series with unit constant term.
template <PreLambdaRing R>
TruncatedSeries<R> invert(const TruncatedSeries<R> &a)
{
    if (!(a.constant_term() == ring_traits<R>::one())) throw NonUnitConstant("invert");
    const BoxShape &box = a.shape();
    const std::size_t r = box.var_count();

    std::vector<std::size_t> nz;
    for (std::size_t idx : a.nonzero_indices()) {
        if (idx != 0) nz.push_back(idx);
    }
    std::vector<std::uint32_t> ek(nz.size() * r);
    for (std::size_t j = 0; j < nz.size(); ++j) box.exponent_at(nz[j], ek.data() + j * r);

    TruncatedSeries<R> out = TruncatedSeries<R>::one(box);
    std::vector<std::uint32_t> en(r);
    // index order is compatible with the componentwise order
    for (std::size_t idx = 1; idx < box.size(); ++idx) {
        box.exponent_at(idx, en.data());
        R acc = ring_traits<R>::zero();
        for (std::size_t j = 0; j < nz.size() && nz[j] <= idx; ++j) {
            const std::uint32_t *e = ek.data() + j * r;
            bool fits = true;
            for (std::size_t v = 0; v < r; ++v) {
                if (e[v] > en[v]) {
                    fits = false;
                    break;
                }
            }
            if (fits) acc += a.at_index(nz[j]) * out.at_index(idx - nz[j]);
        }
        if (!ring_traits<R>::is_zero(acc)) out.set_index(idx, R(-acc));
    }
    return out;
}

/// Expansion of (1 - t^k)^{-b} = sigma_b(t^k) inside `box`.
template <PreLambdaRing R>
TruncatedSeries<R> factor_series(const ExponentVector &k, const R &b, const BoxShape &box)
{
    const std::uint32_t reach = box.max_multiple(k);
    const std::vector<R> sigma = ring_traits<R>::sigma(b, reach);
    return detail::place_along<R>(std::span<const R>(sigma), nullptr, k, box);
}

/// Unique exponents b_k with A = prod_{k != 0} (1 - t^k)^{-b_k} inside the box.
///
/// Visits k in graded-lex order. At each step the remainder agrees with 1 at
/// every exponent visited so far, so b_k is read off as its coefficient at k and
/// the factor is divided out; (1 - t^k)^{-b} has no terms strictly between 0
/// and k, which keeps earlier coefficients untouched.
template <PreLambdaRing R>
Factorization<R> factorize(const TruncatedSeries<R> &a)
{
    if (!(a.constant_term() == ring_traits<R>::one())) throw NonUnitConstant("factorize");
    const BoxShape &box = a.shape();
    Factorization<R> f(box);
    TruncatedSeries<R> rem = a;
    for (std::size_t idx : box.graded_lex_indices()) {
        if (idx == 0) continue;
        const R b = rem.at_index(idx);
        if (ring_traits<R>::is_zero(b)) continue;
        ExponentVector k = box.exponent_at(idx);
        rem = rem * factor_series(k, R(-b), box);
        f.exponents.emplace(std::move(k), b);
    }
    return f;
}

/// prod_k (1 - t^k)^{-b_k} inside the factorization's box.
template <PreLambdaRing R>
TruncatedSeries<R> assemble(const Factorization<R> &f)
{
    TruncatedSeries<R> out = TruncatedSeries<R>::one(f.shape);
    for (const auto &[k, b] : f.exponents) {
        if (k.is_zero()) throw ContractError("factorization contains the zero exponent");
        if (!f.shape.contains(k)) throw ContractError("factorization exponent " + k.to_string() + " outside box " + f.shape.to_string());
        if (ring_traits<R>::is_zero(b)) continue;
        out = out * factor_series(k, b, f.shape);
    }
    return out;
}

/// Coefficientwise image under a map R -> S.
template <PreLambdaRing S, PreLambdaRing R, class F>
TruncatedSeries<S> map_coefficients(const TruncatedSeries<R> &a, F &&f)
{
    TruncatedSeries<S> out(a.shape());
    for (std::size_t idx : a.nonzero_indices()) out.set_index(idx, f(a.at_index(idx)));
    return out;
}

/// Reduction to a smaller box (coefficients outside are dropped).
template <PreLambdaRing R>
TruncatedSeries<R> truncate_to(const TruncatedSeries<R> &a, const BoxShape &smaller)
{
    if (smaller.var_count() != a.var_count()) throw ShapeMismatch("truncate_to: variable count differs");
    TruncatedSeries<R> out(smaller);
    for (std::size_t idx : a.nonzero_indices()) {
        const ExponentVector n = a.shape().exponent_at(idx);
        if (smaller.contains(n)) out.set(n, a.at_index(idx));
    }
    return out;
}

using IntegerSeries = TruncatedSeries<Integer>;
using MotivicSeries = TruncatedSeries<MotivicClass>;
using EPolySeries = TruncatedSeries<EPolynomial>;

} // namespace powerstruct
