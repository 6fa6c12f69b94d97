#pragma once

#include <powerstruct/power.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace powerstruct {

/// Punctual data at a point of a smooth d-dimensional variety, as series over
/// motivic classes: [Hilb^k_{A^d,0}], optionally the nested classes
/// [Z^n_{A^d,0}] in r variables and the pair classes [Z^{(k-1,k)}_{A^d,0}].
struct LocalSeriesData {
    unsigned dimension = 1;
    MotivicSeries hilb_local = MotivicSeries::one(BoxShape::univariate(0));
    std::optional<MotivicSeries> nested_local;
    std::optional<MotivicSeries> pair_local;

    /// Throws ContractError / NonUnitConstant on violated invariants.
    void validate() const;
};

/// The eight t0-series of P_X(t0,t1,t2,t3) mod (t1^2, t2^2, t3^2), i.e. the
/// coefficients of 1, t1, t2, t1t2, t3, t1t3, t2t3, t1t2t3.
struct NestedPackage {
    static constexpr std::array<std::string_view, 8> slot_names = {"hilb", "F", "F_prime", "T", "Z_pair", "Z_1pair", "G", "F_pair"};
    /// (t1, t2, t3) exponents of each slot, same order as slot_names.
    static constexpr std::array<std::array<std::uint32_t, 3>, 8> slot_monomials = {
        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}};

    std::vector<MotivicSeries> slots;

    [[nodiscard]] const MotivicSeries &slot(std::string_view name) const;
    [[nodiscard]] const MotivicSeries &hilb() const { return slots[0]; }
    [[nodiscard]] const MotivicSeries &F() const { return slots[1]; }
    [[nodiscard]] const MotivicSeries &F_prime() const { return slots[2]; }
    [[nodiscard]] const MotivicSeries &T() const { return slots[3]; }
    [[nodiscard]] const MotivicSeries &Z_pair() const { return slots[4]; }
    [[nodiscard]] const MotivicSeries &Z_1pair() const { return slots[5]; }
    [[nodiscard]] const MotivicSeries &G() const { return slots[6]; }
    [[nodiscard]] const MotivicSeries &F_pair() const { return slots[7]; }
};

/// Kapranov zeta function 1 + [X] t + [S^2 X] t^2 + ... to order N.
MotivicSeries kapranov_zeta(const MotivicClass &a, std::uint32_t order);

/// Punctual Hilbert series of a smooth curve: 1 + t + t^2 + ...
MotivicSeries hilb_local_curve(std::uint32_t order);

/// Punctual Hilbert series of a smooth surface: prod_{k>=1} (1 - L^{k-1} t^k)^{-1}.
MotivicSeries hilb_local_surface(std::uint32_t order);

/// Built-in punctual Hilbert series for d = 1, 2; other dimensions must be supplied.
MotivicSeries hilb_local(unsigned dimension, std::uint32_t order);

/// sum_n [Hilb^n_X] t^n = (local)^{[X]}.
MotivicSeries hilb_global(const MotivicClass &x, const MotivicSeries &local);

/// Nested Hilbert series of depth r: (local nested series)^{[X]}.
MotivicSeries nested_global(const MotivicClass &x, const MotivicSeries &local);

/// Nested punctual series on a curve: sum over 0 <= n_1 <= ... <= n_r of t^n.
MotivicSeries nested_d1_local(const std::vector<std::uint32_t> &bounds);

/// The eight-series package (f_d)^{[X]} mod (t1^2, t2^2, t3^2) to order N in t0.
/// Requires local.hilb_local and local.pair_local (coefficient k = [Z^{(k-1,k)}_{A^d,0}],
/// constant term ignored), both of order >= N.
NestedPackage cheah_main(const LocalSeriesData &local, const MotivicClass &x, std::uint32_t order);

/// The local series f_d(t0,t1,t2,t3) in the box (N,1,1,1).
MotivicSeries cheah_local_series(const LocalSeriesData &local, std::uint32_t order);

/// sum_{n>=1} [Z^{(n-1,n)}_S] t^n = [S] t / (1 - L t) * (prod_k (1 - L^{k-1} t^k)^{-1})^{[S]}.
MotivicSeries incidence_series(const MotivicClass &s, std::uint32_t order);

/// [S] * (hilb local)^{[X]-[C]} * (m local)^{[C]} to order N.
MotivicSeries li_qin_series(const MotivicClass &s, const MotivicClass &x, const MotivicClass &c, const LocalSeriesData &local,
                            const MotivicSeries &m_local, std::uint32_t order);

} // namespace powerstruct
