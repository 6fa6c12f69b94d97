#pragma once

#include <powerstruct/power.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace powerstruct {

/// Finite model of a series 1 + sum_i [A_i] t^i raised to [M]: |M| and the
/// cardinalities |A_i| for nonzero multi-indices i.
struct FiniteCoefficientData {
    std::uint64_t m_size = 0;
    std::uint32_t var_count = 1;
    std::map<ExponentVector, std::uint64_t, GradedLexLess> parts;

    void validate() const;
    /// 1 + sum_i |A_i| t^i restricted to `box`.
    [[nodiscard]] IntegerSeries series(const BoxShape &box) const;
};

enum class ConfigEnumeration {
    /// Occupancy vectors (how many points of M carry each part type) weighted
    /// by placement counts.
    occupancy,
    /// Every pair (K, phi) with K a subset of M and phi: K -> disjoint union of the A_i, one by one.
    naive,
};

/// Search-space limit shared by both enumerations.
inline constexpr std::uint64_t config_enumeration_limit = 10'000'000;

/// Number of pairs (K, phi), K a subset of an m-element set, phi: K -> union A_i,
/// with sum_{x in K} weight(phi(x)) = n. Throws GuardExceeded past the limit.
Integer config_count(const FiniteCoefficientData &data, const ExponentVector &n, ConfigEnumeration mode = ConfigEnumeration::occupancy);

/// sum over k with sum_i i k_i = n of m! / ((m - sum k_i)! prod k_i!) prod a_i^{k_i}.
Integer multinomial_coefficient(const FiniteCoefficientData &data, const ExponentVector &n);

struct ConfigCheckRow {
    ExponentVector n;
    Integer configurations;
    Integer closed_form;
    Integer engine;
    /// Present when the naive enumeration fit the guard.
    std::optional<Integer> naive;
};

struct ConfigCheckReport {
    std::vector<ConfigCheckRow> rows;
    bool passed = true;
    std::string first_mismatch;
};

/// For every n in `box`: config_count = multinomial_coefficient = coefficient of
/// power(series, m) over the integers (and the naive count, when requested and feasible).
ConfigCheckReport cross_check(const FiniteCoefficientData &data, const BoxShape &box, bool with_naive = false);

} // namespace powerstruct
