#pragma once

#include <powerstruct/integer.hpp>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace powerstruct {

/// Finite sum of monomials x^key with integer coefficients.
///
/// Keys form an ordered additive monoid (default-constructed key is the unit
/// exponent). Terms are kept sorted by key with no zero coefficients, so the
/// representation is canonical and equality is structural.
template <class Key>
class SparsePoly {
public:
    using key_type = Key;
    using term_type = std::pair<Key, Integer>;

    SparsePoly() = default;
    SparsePoly(const Integer &constant) // NOLINT(google-explicit-constructor)
    {
        if (constant != 0) terms_.emplace_back(Key{}, constant);
    }
    SparsePoly(long constant) : SparsePoly(Integer(constant)) {} // NOLINT(google-explicit-constructor)

    static SparsePoly monomial(const Key &exponent, const Integer &coefficient = 1)
    {
        SparsePoly p;
        if (coefficient != 0) p.terms_.emplace_back(exponent, coefficient);
        return p;
    }

    /// Builds the canonical form from arbitrary (unsorted, repeated, zero) terms.
    static SparsePoly from_terms(std::vector<term_type> terms)
    {
        SparsePoly p;
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    [[nodiscard]] const std::vector<term_type> &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] Integer coefficient(const Key &exponent) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                                   [](const term_type &t, const Key &k) { return t.first < k; });
        if (it != terms_.end() && it->first == exponent) return it->second;
        return 0;
    }

    /// Product with the monomial c * x^shift; key order is preserved.
    [[nodiscard]] SparsePoly shifted(const Key &shift, const Integer &c = 1) const
    {
        SparsePoly p;
        if (c == 0) return p;
        p.terms_.reserve(terms_.size());
        for (const auto &[k, v] : terms_) p.terms_.emplace_back(k + shift, v * c);
        return p;
    }

    SparsePoly &operator+=(const SparsePoly &rhs)
    {
        if (rhs.terms_.empty()) return *this;
        if (terms_.empty()) return *this = rhs;
        std::vector<term_type> out;
        out.reserve(terms_.size() + rhs.terms_.size());
        auto a = terms_.begin();
        auto b = rhs.terms_.begin();
        while (a != terms_.end() && b != rhs.terms_.end()) {
            if (a->first < b->first) {
                out.push_back(std::move(*a++));
            } else if (b->first < a->first) {
                out.push_back(*b++);
            } else {
                Integer s = a->second + b->second;
                if (s != 0) out.emplace_back(a->first, std::move(s));
                ++a;
                ++b;
            }
        }
        for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
        for (; b != rhs.terms_.end(); ++b) out.push_back(*b);
        terms_ = std::move(out);
        return *this;
    }

    SparsePoly &operator-=(const SparsePoly &rhs) { return *this += -rhs; }

    SparsePoly &operator*=(const SparsePoly &rhs) { return *this = *this * rhs; }

    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly &rhs) { return lhs += rhs; }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly &rhs) { return lhs -= rhs; }

    SparsePoly operator-() const
    {
        SparsePoly p = *this;
        for (auto &t : p.terms_) t.second = -t.second;
        return p;
    }

    friend SparsePoly operator*(const SparsePoly &lhs, const SparsePoly &rhs)
    {
        if (lhs.terms_.empty() || rhs.terms_.empty()) return {};
        if (rhs.terms_.size() == 1) return lhs.shifted(rhs.terms_[0].first, rhs.terms_[0].second);
        if (lhs.terms_.size() == 1) return rhs.shifted(lhs.terms_[0].first, lhs.terms_[0].second);
        std::vector<term_type> out;
        out.reserve(lhs.terms_.size() * rhs.terms_.size());
        for (const auto &[ka, va] : lhs.terms_) {
            for (const auto &[kb, vb] : rhs.terms_) out.emplace_back(ka + kb, va * vb);
        }
        return from_terms(std::move(out));
    }

    friend bool operator==(const SparsePoly &, const SparsePoly &) = default;

private:
    void canonicalize()
    {
        std::sort(terms_.begin(), terms_.end(), [](const term_type &a, const term_type &b) { return a.first < b.first; });
        std::vector<term_type> out;
        out.reserve(terms_.size());
        for (auto &t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second += t.second;
            } else {
                if (!out.empty() && out.back().second == 0) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().second == 0) out.pop_back();
        terms_ = std::move(out);
    }

    std::vector<term_type> terms_;
};

} // namespace powerstruct
