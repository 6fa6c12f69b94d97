#include "oracles.hpp"

#include <powerstruct/config_oracle.hpp>

#include <gtest/gtest.h>

using namespace powerstruct;
using namespace powerstruct::testing;

namespace {

FiniteCoefficientData univariate(std::uint64_t m, const std::map<std::uint32_t, std::uint64_t> &parts)
{
    FiniteCoefficientData d;
    d.m_size = m;
    for (const auto &[i, a] : parts) d.parts.emplace(ExponentVector{i}, a);
    return d;
}

std::map<std::vector<std::uint32_t>, long> oracle_parts(const FiniteCoefficientData &d)
{
    std::map<std::vector<std::uint32_t>, long> out;
    for (const auto &[i, a] : d.parts) out[i.entries()] = static_cast<long>(a);
    return out;
}

FiniteCoefficientData random_coefficient_data(Rng &rng)
{
    FiniteCoefficientData d;
    d.m_size = static_cast<std::uint64_t>(rng.uniform(0, 5));
    d.var_count = static_cast<std::uint32_t>(rng.uniform(1, 2));
    const int count = static_cast<int>(rng.uniform(0, 4));
    for (int k = 0; k < count; ++k) {
        std::vector<std::uint32_t> e(d.var_count);
        for (auto &v : e) v = static_cast<std::uint32_t>(rng.uniform(0, 3));
        if (std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; })) e[0] = 1;
        d.parts[ExponentVector(e)] = static_cast<std::uint64_t>(rng.uniform(0, 3));
    }
    return d;
}

BoxShape box_for(const FiniteCoefficientData &d, std::uint32_t bound)
{
    return BoxShape(std::vector<std::uint32_t>(d.var_count, bound));
}

} // namespace

TEST(FiniteCoefficientData, Validation)
{
    FiniteCoefficientData d = univariate(2, {{1, 1}});
    EXPECT_NO_THROW(d.validate());
    d.parts.emplace(ExponentVector{0}, 1);
    EXPECT_THROW(d.validate(), ContractError);
    FiniteCoefficientData wrong = univariate(2, {});
    wrong.parts.emplace(ExponentVector{1, 0}, 1);
    EXPECT_THROW(wrong.validate(), ShapeMismatch);
    FiniteCoefficientData none;
    none.var_count = 0;
    EXPECT_THROW(none.validate(), ContractError);
    EXPECT_EQ(univariate(3, {{1, 2}, {7, 1}}).series(BoxShape({3})), IntegerSeries::univariate({1, 2, 0, 0}));
}

TEST(ConfigCount, Examples)
{
    for (std::uint64_t m = 0; m <= 6; ++m) {
        for (std::uint32_t n = 0; n <= 7; ++n) {
            EXPECT_EQ(config_count(univariate(m, {{1, 1}}), ExponentVector{n}), pascal(static_cast<long>(m), n)) << m << " " << n;
            std::map<std::uint32_t, std::uint64_t> all;
            for (std::uint32_t k = 1; k <= n; ++k) all[k] = 1;
            EXPECT_EQ(config_count(univariate(m, all), ExponentVector{n}), (n == 0 ? 1 : pascal(static_cast<long>(m + n) - 1, n))) << m << " " << n;
        }
    }
    EXPECT_EQ(config_count(univariate(3, {{1, 2}}), ExponentVector{2}), 12);
    EXPECT_EQ(config_count(univariate(0, {{1, 5}}), ExponentVector{0}), 1);
    EXPECT_EQ(config_count(univariate(0, {{1, 5}}), ExponentVector{3}), 0);
    EXPECT_THROW(config_count(univariate(2, {{1, 1}}), ExponentVector{1, 1}), ShapeMismatch);
}

TEST(MultinomialCoefficient, Examples)
{
    EXPECT_EQ(multinomial_coefficient(univariate(3, {{1, 2}}), ExponentVector{2}), 12);
    const std::vector<long> cube = {1, 6, 12, 8, 0};
    for (std::uint32_t n = 0; n <= 4; ++n) EXPECT_EQ(multinomial_coefficient(univariate(3, {{1, 2}}), ExponentVector{n}), cube[n]);
    EXPECT_EQ(multinomial_coefficient(univariate(4, {{2, 3}}), ExponentVector{0}), 1);
    EXPECT_EQ(multinomial_coefficient(univariate(0, {{1, 1}, {2, 1}}), ExponentVector{2}), 0);
    EXPECT_EQ(multinomial_coefficient(univariate(5, {{2, 1}}), ExponentVector{3}), 0);
}

TEST(ConfigCount, NaiveEnumerationAgrees)
{
    Rng rng(307);
    for (int i = 0; i < 60; ++i) {
        FiniteCoefficientData d = random_coefficient_data(rng);
        d.m_size = std::min<std::uint64_t>(d.m_size, 4);
        for (std::size_t idx : box_for(d, 3).graded_lex_indices()) {
            const ExponentVector n = box_for(d, 3).exponent_at(idx);
            EXPECT_EQ(config_count(d, n, ConfigEnumeration::naive), config_count(d, n));
        }
    }
}

TEST(ConfigCount, TripleAgreementAgainstIndependentOracles)
{
    Rng rng(311);
    for (int i = 0; i < 80; ++i) {
        const FiniteCoefficientData d = random_coefficient_data(rng);
        const BoxShape box = box_for(d, static_cast<std::uint32_t>(rng.uniform(1, 5)));
        const IntegerSeries product = ordinary_power(d.series(box), static_cast<long>(d.m_size));
        for (std::size_t idx : box.graded_lex_indices()) {
            const ExponentVector n = box.exponent_at(idx);
            const Integer expect = multinomial_oracle(static_cast<long>(d.m_size), oracle_parts(d), n.entries());
            EXPECT_EQ(config_count(d, n), expect) << n.to_string();
            EXPECT_EQ(multinomial_coefficient(d, n), expect) << n.to_string();
            EXPECT_EQ(product.coeff(n), expect) << n.to_string();
        }
    }
}

TEST(CrossCheck, Examples)
{
    const auto one = cross_check(univariate(2, {{1, 1}, {2, 1}}), BoxShape({4}));
    EXPECT_TRUE(one.passed) << one.first_mismatch;
    EXPECT_EQ(one.rows.size(), 5u);

    FiniteCoefficientData two;
    two.m_size = 2;
    two.var_count = 2;
    two.parts = {{ExponentVector{1, 0}, 1}, {ExponentVector{0, 1}, 1}};
    const auto report = cross_check(two, BoxShape({2, 2}), true);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.rows.size(), 9u);
    for (const auto &row : report.rows) {
        ASSERT_TRUE(row.naive.has_value());
        EXPECT_EQ(*row.naive, row.engine);
    }
    // (1 + x + y)^2
    EXPECT_EQ(report.rows[4].n, (ExponentVector{1, 1}));
    EXPECT_EQ(report.rows[4].engine, 2);

    const FiniteCoefficientData single = univariate(1, {{1, 3}, {3, 2}});
    const auto unit = cross_check(single, BoxShape({5}));
    EXPECT_TRUE(unit.passed);
    for (const auto &row : unit.rows) EXPECT_EQ(row.engine, single.series(BoxShape({5})).coeff(row.n));
}

TEST(CrossCheck, RandomizedSuite)
{
    Rng rng(313);
    for (int i = 0; i < 40; ++i) {
        const FiniteCoefficientData d = random_coefficient_data(rng);
        const auto report = cross_check(d, box_for(d, 5), d.m_size <= 3);
        EXPECT_TRUE(report.passed) << report.first_mismatch;
    }
}

TEST(ConfigGuard, Refuses)
{
    EXPECT_THROW(config_count(univariate(30, {{1, 1}}), ExponentVector{3}, ConfigEnumeration::naive), GuardExceeded);
    EXPECT_NO_THROW(config_count(univariate(10, {{1, 1}}), ExponentVector{3}, ConfigEnumeration::naive));
    // parts exceeding n do not enter the search space
    EXPECT_EQ(config_count(univariate(40, {{4, 1}}), ExponentVector{3}, ConfigEnumeration::naive), 0);

    FiniteCoefficientData wide;
    wide.m_size = 1'000'000;
    wide.var_count = 2;
    for (std::uint32_t i = 0; i <= 4; ++i) {
        for (std::uint32_t j = 0; j <= 4; ++j) {
            if (i + j > 0) wide.parts[ExponentVector{i, j}] = 1;
        }
    }
    EXPECT_THROW(config_count(wide, ExponentVector{16, 16}), GuardExceeded);

    // 3^16 pairs exceed the naive limit once the part fits; the n = 0 row has no usable part
    const auto report = cross_check(univariate(16, {{1, 2}}), BoxShape({3}), true);
    EXPECT_TRUE(report.passed);
    for (const auto &row : report.rows) EXPECT_EQ(row.naive.has_value(), row.n.is_zero());
}
