#pragma once

#include <powerstruct/power.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace powerstruct {

/// One fixed-point component X^g_alpha / C_G(g) with its shift number F^g_alpha.
struct FixedComponent {
    MotivicClass component;
    Rational shift;

    friend bool operator==(const FixedComponent &, const FixedComponent &) = default;
};

/// Motivic data of a G-variety X of dimension d, |G| = m: for each conjugacy
/// class (the identity class first) the list of its fixed components.
struct OrbifoldDatum {
    std::uint32_t group_order = 1;
    std::uint32_t dimension = 1;
    std::vector<std::vector<FixedComponent>> classes;

    /// Shifts lie in [0, d) and in (1/m)Z; the identity class (index 0) has shift 0.
    void validate() const;

    friend bool operator==(const OrbifoldDatum &, const OrbifoldDatum &) = default;
};

/// [X, G] = sum_c sum_alpha [X^g_alpha / C_G(g)] L^{F^g_alpha}.
MotivicClass orbifold_class(const OrbifoldDatum &d);

/// E_orb(X, G; u, v): the Hodge-Deligne image of [X, G].
EPolynomial orbifold_e_function(const OrbifoldDatum &d);

/// sum_n [X^n, G_n] t^n = prod_{r>=1} (1 - L^{(r-1)d/2} t^r)^{-[X,G]} to order N.
MotivicSeries wreath_series(const OrbifoldDatum &d, std::uint32_t order);

/// Finite group G given as permutations of X = {0, ..., |X|-1}.
///
/// Elements are stored by index; index 0 need not be the identity. Composition
/// is (g h)(x) = g(h(x)). The constructor checks bijectivity, that the identity
/// is present, distinctness and closure under composition and inverses.
class FiniteGroupAction {
public:
    struct Element {
        std::string label;
        std::vector<std::uint32_t> perm;
    };

    FiniteGroupAction(std::size_t x_size, std::vector<Element> elements);

    /// Cyclic group Z/n rotating n points.
    static FiniteGroupAction cyclic(std::uint32_t n);
    /// Full symmetric group S_n on n points.
    static FiniteGroupAction symmetric(std::uint32_t n);
    /// Trivial group on `points` points.
    static FiniteGroupAction trivial(std::uint32_t points);

    [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
    [[nodiscard]] std::size_t x_size() const noexcept { return x_size_; }
    [[nodiscard]] const std::vector<Element> &elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t identity() const noexcept { return identity_; }
    [[nodiscard]] std::size_t multiply(std::size_t g, std::size_t h) const { return table_[g * order() + h]; }
    [[nodiscard]] std::size_t inverse(std::size_t g) const { return inverse_[g]; }
    [[nodiscard]] std::uint32_t apply(std::size_t g, std::uint32_t x) const { return elements_[g].perm[x]; }

    /// Conjugacy class index of each element; classes are numbered by first
    /// appearance with the identity class as 0.
    [[nodiscard]] std::size_t class_of(std::size_t g) const { return class_of_[g]; }
    [[nodiscard]] std::size_t class_count() const noexcept { return class_count_; }
    /// First element of each conjugacy class.
    [[nodiscard]] std::vector<std::size_t> class_representatives() const;

    /// Number of G-orbits on X.
    [[nodiscard]] std::size_t quotient_size() const;
    /// Orbits of C_G(g) on X^g for a representative g of class c.
    [[nodiscard]] std::size_t twisted_orbit_count(std::size_t c) const;
    /// chi(X, G) = sum_c #(X^g / C_G(g)) for a finite set X.
    [[nodiscard]] Integer orbifold_euler() const;
    /// Euler-level datum: component class = orbit count, all shifts zero.
    [[nodiscard]] OrbifoldDatum chi_datum(std::uint32_t dimension = 1) const;

private:
    std::size_t x_size_;
    std::vector<Element> elements_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> class_of_;
    std::size_t class_count_ = 0;
    std::size_t identity_ = 0;
};

/// Element (g, s) of G wr S_n: g = (g_1..g_n) element indices, s a permutation
/// of {0..n-1} (s[i] is the image of i).
struct WreathElement {
    std::vector<std::size_t> g;
    std::vector<std::uint32_t> s;

    friend bool operator==(const WreathElement &, const WreathElement &) = default;
    friend auto operator<=>(const WreathElement &, const WreathElement &) = default;
};

/// Partition-valued function on conjugacy classes of G: class index -> cycle
/// lengths in non-increasing order. Classes with empty partitions are absent.
using WreathType = std::map<std::size_t, std::vector<std::uint32_t>>;

/// Total size sum_c |rho(c)|.
std::uint32_t type_weight(const WreathType &type);

/// Refuses enumeration when |G|^n n! > 10^6 or |X|^n > 10^6.
inline constexpr std::uint64_t wreath_enumeration_limit = 1'000'000;
void check_wreath_guard(const FiniteGroupAction &action, std::uint32_t n);

/// (g, s)(h, t) = (g . s(h), s t) with s(h)_i = h_{s^{-1}(i)}.
WreathElement wreath_multiply(const WreathElement &a, const WreathElement &b, const FiniteGroupAction &action);
WreathElement wreath_inverse(const WreathElement &a, const FiniteGroupAction &action);
WreathElement wreath_identity(std::uint32_t n, const FiniteGroupAction &action);
/// ((g), s)(x)_i = g_i x_{s^{-1}(i)}
std::vector<std::uint32_t> wreath_apply(const WreathElement &a, const std::vector<std::uint32_t> &x, const FiniteGroupAction &action);

/// Cycle-products g_{i_r} ... g_{i_1} of each cycle (i_1 -> i_2 -> ... -> i_r) of s,
/// classified by conjugacy class and cycle length.
WreathType element_type(const WreathElement &a, const FiniteGroupAction &action);

/// Dense enumeration of G_n = G wr S_n (guarded).
class WreathGroup {
public:
    WreathGroup(const FiniteGroupAction &action, std::uint32_t n);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::uint32_t n() const noexcept { return n_; }
    [[nodiscard]] WreathElement element(std::size_t index) const;
    [[nodiscard]] std::size_t index_of(const WreathElement &a) const;

private:
    const FiniteGroupAction *action_;
    std::uint32_t n_;
    std::vector<std::vector<std::uint32_t>> perms_;
    std::map<std::vector<std::uint32_t>, std::size_t> perm_index_;
    std::size_t size_ = 0;
    std::size_t g_block_ = 1;
};

struct WreathClass {
    WreathElement representative;
    std::size_t size = 0;
    WreathType type;
};

/// Conjugacy classes of G_n by explicit conjugation orbits (guarded).
std::vector<WreathClass> wreath_conjugacy_classes(std::uint32_t n, const FiniteGroupAction &action);

/// Number of partition-valued functions rho on `class_count` classes with ||rho|| = n,
/// counted by direct enumeration.
std::uint64_t count_wreath_types(std::size_t class_count, std::uint32_t n);

/// chi(X^n, G_n) = sum over conjugacy classes of G_n of #((X^n)^a / Z(a)), by
/// brute-force enumeration (guarded).
Integer wreath_oracle_euler(const FiniteGroupAction &action, std::uint32_t n);

/// Orbits of G_n on X^n, by enumeration (guarded).
std::uint64_t wreath_orbit_count(const FiniteGroupAction &action, std::uint32_t n);

struct WreathCheckRow {
    std::uint32_t n = 0;
    /// Brute-force chi(X^n, G_n).
    Integer oracle;
    /// Coefficient of t^n in prod_r (1 - t^r)^{-chi(X,G)}.
    Integer series;
    std::size_t conjugacy_classes = 0;
    std::uint64_t types = 0;
    /// Every conjugacy class carries a single type and distinct classes carry distinct types.
    bool types_consistent = false;

    [[nodiscard]] bool passed() const { return oracle == series && conjugacy_classes == types && types_consistent; }
};

struct WreathCheckReport {
    std::vector<WreathCheckRow> rows;
    /// Smallest n in range refused by the enumeration guard, 0 when none.
    std::uint32_t refused_from = 0;
    bool passed = true;
    std::string first_mismatch;
};

/// Rows for n = 1..max_n, stopping at the first n the guard refuses.
WreathCheckReport wreath_check(const FiniteGroupAction &action, std::uint32_t max_n);

} // namespace powerstruct
