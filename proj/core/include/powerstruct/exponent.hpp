#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace powerstruct {

/// Multi-index n = (n_1, ..., n_r) of a monomial t_1^{n_1} ... t_r^{n_r}.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t vars) : e_(vars, 0) {}
    ExponentVector(std::initializer_list<std::uint32_t> e) : e_(e) {}
    explicit ExponentVector(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    [[nodiscard]] std::size_t size() const noexcept { return e_.size(); }
    [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t &operator[](std::size_t i) { return e_[i]; }
    [[nodiscard]] const std::vector<std::uint32_t> &entries() const noexcept { return e_; }

    [[nodiscard]] std::uint64_t total_degree() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;

    /// Componentwise n_i <= m_i.
    [[nodiscard]] bool divides(const ExponentVector &m) const;

    friend ExponentVector operator+(const ExponentVector &a, const ExponentVector &b);
    friend ExponentVector operator*(std::uint32_t k, const ExponentVector &a);

    friend bool operator==(const ExponentVector &, const ExponentVector &) = default;
    /// Plain lexicographic order.
    friend std::strong_ordering operator<=>(const ExponentVector &, const ExponentVector &) = default;

    /// "(1,0,2)"
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<std::uint32_t> e_;
};

/// Total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const ExponentVector &a, const ExponentVector &b) const
    {
        const auto da = a.total_degree();
        const auto db = b.total_degree();
        if (da != db) return da < db;
        return a < b;
    }
};

/// Per-variable truncation box {n : n_i <= N_i} with a dense mixed-radix
/// indexing. Index order is lexicographic, so k <= n componentwise implies
/// index(k) <= index(n), and index(n - k) = index(n) - index(k).
class BoxShape {
public:
    explicit BoxShape(std::vector<std::uint32_t> bounds);
    static BoxShape univariate(std::uint32_t order) { return BoxShape({order}); }

    [[nodiscard]] std::size_t var_count() const noexcept { return bounds_.size(); }
    [[nodiscard]] const std::vector<std::uint32_t> &bounds() const noexcept { return bounds_; }
    [[nodiscard]] std::uint32_t bound(std::size_t i) const { return bounds_[i]; }
    /// Number of monomials in the box.
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    [[nodiscard]] bool contains(const ExponentVector &n) const;
    /// Throws ContractError when n lies outside the box.
    [[nodiscard]] std::size_t index_of(const ExponentVector &n) const;
    [[nodiscard]] ExponentVector exponent_at(std::size_t index) const;
    void exponent_at(std::size_t index, std::uint32_t *out) const;

    /// Box indices sorted in graded-lex order of their exponents.
    [[nodiscard]] std::vector<std::size_t> graded_lex_indices() const;

    /// Largest j with j*k inside the box; k must be nonzero.
    [[nodiscard]] std::uint32_t max_multiple(const ExponentVector &k) const;

    friend bool operator==(const BoxShape &a, const BoxShape &b) { return a.bounds_ == b.bounds_; }

    [[nodiscard]] std::string to_string() const;

private:
    std::vector<std::uint32_t> bounds_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

} // namespace powerstruct
