#include "oracles.hpp"

#include <powerstruct/motivic.hpp>

#include <gtest/gtest.h>

using namespace powerstruct;
using namespace powerstruct::testing;

namespace {

MotivicSeries geometric(std::uint32_t order, const MotivicClass &ratio = MotivicClass(1L))
{
    std::vector<MotivicClass> c;
    MotivicClass p(1L);
    for (std::uint32_t j = 0; j <= order; ++j, p *= ratio) c.push_back(p);
    return MotivicSeries::univariate(c);
}

// prod_{i=0}^{n} 1/(1 - L^i t) by schoolbook products of geometric series
MotivicSeries zeta_projective_oracle(unsigned n, std::uint32_t order)
{
    MotivicSeries out = MotivicSeries::one(BoxShape({order}));
    for (unsigned i = 0; i <= n; ++i) out = naive_mul(out, geometric(order, lefschetz(static_cast<std::int64_t>(i))));
    return out;
}

IntegerSeries longs(const std::vector<long> &v) { return IntegerSeries::univariate(std::vector<Integer>(v.begin(), v.end())); }

// t / (1 - L t) * H: the pair series that makes the nested package agree with the incidence formula
MotivicSeries pair_candidate(std::uint32_t order)
{
    MotivicSeries marked(BoxShape({order}));
    for (std::uint32_t j = 1; j <= order; ++j) marked.set(ExponentVector{j}, lefschetz(static_cast<std::int64_t>(j - 1)));
    return naive_mul(marked, hilb_local_surface(order));
}

LocalSeriesData surface_data(std::uint32_t order)
{
    LocalSeriesData local;
    local.dimension = 2;
    local.hilb_local = hilb_local_surface(order);
    local.pair_local = pair_candidate(order);
    return local;
}

} // namespace

TEST(KapranovZeta, Examples)
{
    for (int n = -1; n <= 3; ++n) EXPECT_EQ(kapranov_zeta(lefschetz(n), 6), geometric(6, lefschetz(n)));
    EXPECT_EQ(kapranov_zeta(projective_space(2), 6), zeta_projective_oracle(2, 6));
    EXPECT_EQ(kapranov_zeta(MotivicClass(), 4), MotivicSeries::one(BoxShape({4})));
}

TEST(KapranovZeta, ProjectiveSpacesHaveClosedForm)
{
    for (unsigned n = 0; n <= 4; ++n) EXPECT_EQ(kapranov_zeta(projective_space(n), 6), zeta_projective_oracle(n, 6)) << "n=" << n;
}

TEST(KapranovZeta, IsAdditive)
{
    Rng rng(97);
    for (int i = 0; i < 40; ++i) {
        const MotivicClass a = random_class(rng), b = random_class(rng);
        EXPECT_EQ(kapranov_zeta(a + b, 7), kapranov_zeta(a, 7) * kapranov_zeta(b, 7));
        EXPECT_EQ(kapranov_zeta(a, 7), power(geometric(7), a));
    }
}

TEST(HilbLocalSurface, LowCoefficients)
{
    const auto h = hilb_local_surface(6);
    EXPECT_EQ(h.coeff(0), MotivicClass(1L));
    EXPECT_EQ(h.coeff(1), MotivicClass(1L));
    EXPECT_EQ(h.coeff(2), parse_class("1+L"));
    EXPECT_EQ(h.coeff(3), parse_class("1+L+L^2"));
    // partitions of 4 weighted by L^{n - number of parts}: 1 + L + 2L^2 + L^3
    EXPECT_EQ(h.coeff(4), parse_class("1+L+2*L^2+L^3"));
    std::vector<long> p = partition_numbers(6);
    EXPECT_EQ(specialize_euler(h), longs(p));
}

TEST(HilbGlobal, Examples)
{
    Rng rng(101);
    for (int i = 0; i < 20; ++i) {
        const MotivicClass x = random_class(rng);
        EXPECT_EQ(hilb_global(x, hilb_local_curve(6)), kapranov_zeta(x, 6));
    }
    EXPECT_EQ(specialize_euler(hilb_global(MotivicClass(1L), hilb_local_surface(10))), longs(partition_numbers(10)));
    // chi(x) = 1 from a class other than the point
    EXPECT_EQ(specialize_euler(hilb_global(parse_class("2*L-L^{1/2}"), hilb_local_surface(8))), longs(partition_numbers(8)));
    EXPECT_EQ(hilb_global(MotivicClass(), hilb_local_surface(5)), MotivicSeries::one(BoxShape({5})));
    EXPECT_EQ(hilb_local(1, 4), hilb_local_curve(4));
    EXPECT_THROW(hilb_local(3, 4), ContractError);
    EXPECT_THROW(hilb_global(MotivicClass(1L), nested_d1_local({2, 2})), ShapeMismatch);
}

TEST(NestedD1Local, Examples)
{
    EXPECT_EQ(nested_d1_local({5}), geometric(5));
    const auto two = nested_d1_local({2, 2});
    MotivicSeries expect(BoxShape({2, 2}));
    for (ExponentVector n : {ExponentVector{0, 0}, ExponentVector{0, 1}, ExponentVector{0, 2}, ExponentVector{1, 1}, ExponentVector{1, 2},
                             ExponentVector{2, 2}}) {
        expect.set(n, MotivicClass(1L));
    }
    EXPECT_EQ(two, expect);
    EXPECT_TRUE(nested_d1_local({2, 2}).coeff({2, 1}).is_zero());
}

TEST(NestedGlobal, Examples)
{
    const MotivicClass x = parse_class("1+L");
    EXPECT_EQ(nested_global(x, nested_d1_local({5})), hilb_global(x, hilb_local_curve(5)));
    EXPECT_EQ(nested_global(MotivicClass(), nested_d1_local({3, 3})), MotivicSeries::one(BoxShape({3, 3})));
}

TEST(NestedGlobal, DiagonalIsTheSymmetricPower)
{
    Rng rng(103);
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const std::uint32_t n_max = r == 3 ? 4 : 6;
        for (int i = 0; i < 3; ++i) {
            const MotivicClass x = random_class(rng);
            const auto global = nested_global(x, nested_d1_local(std::vector<std::uint32_t>(r, n_max)));
            const auto zeta = kapranov_zeta(x, n_max);
            for (std::uint32_t n = 0; n <= n_max; ++n) {
                EXPECT_EQ(global.coeff(ExponentVector(std::vector<std::uint32_t>(r, n))), zeta.coeff(n)) << "r=" << r << " n=" << n;
            }
        }
    }
}

TEST(LocalSeriesData, Validation)
{
    LocalSeriesData ok = surface_data(3);
    EXPECT_NO_THROW(ok.validate());

    LocalSeriesData bad_unit = ok;
    bad_unit.hilb_local.set(ExponentVector{0}, MotivicClass(2L));
    EXPECT_THROW(bad_unit.validate(), NonUnitConstant);

    LocalSeriesData bad_nested = ok;
    bad_nested.nested_local = nested_d1_local({2, 2});
    bad_nested.nested_local->set({2, 1}, MotivicClass(1L));
    EXPECT_THROW(bad_nested.validate(), ContractError);

    LocalSeriesData zero_dim = ok;
    zero_dim.dimension = 0;
    EXPECT_THROW(zero_dim.validate(), ContractError);
}

TEST(CheahMain, SlotConsistency)
{
    Rng rng(107);
    const std::uint32_t order = 5;
    const LocalSeriesData local = surface_data(order);
    for (int i = 0; i < 4; ++i) {
        const MotivicClass x = random_class(rng);
        const NestedPackage pkg = cheah_main(local, x, order);
        ASSERT_EQ(pkg.slots.size(), 8u);
        EXPECT_EQ(pkg.hilb(), hilb_global(x, local.hilb_local));
        EXPECT_EQ(pkg.F(), pkg.F_prime());
        EXPECT_EQ(&pkg.slot("Z_pair"), &pkg.Z_pair());
        for (const auto &s : pkg.slots) EXPECT_EQ(s.order(), order);
    }
    EXPECT_THROW((void)cheah_main(local, MotivicClass(1L), order).slot("nope"), ContractError);
}

TEST(CheahMain, ZeroClassGivesTheUnitPackage)
{
    const NestedPackage pkg = cheah_main(surface_data(4), MotivicClass(), 4);
    EXPECT_EQ(pkg.hilb(), MotivicSeries::one(BoxShape({4})));
    for (std::size_t i = 1; i < pkg.slots.size(); ++i) EXPECT_EQ(pkg.slots[i], MotivicSeries(BoxShape({4}))) << NestedPackage::slot_names[i];
}

TEST(CheahMain, PairSlotReproducesTheIncidenceSeries)
{
    EXPECT_EQ(pair_candidate(4).coeff(1), MotivicClass(1L));
    EXPECT_EQ(pair_candidate(4).coeff(2), parse_class("1+L"));
    Rng rng(109);
    for (int i = 0; i < 4; ++i) {
        const MotivicClass s = i == 0 ? MotivicClass(1L) : random_class(rng);
        EXPECT_EQ(cheah_main(surface_data(5), s, 5).Z_pair(), incidence_series(s, 5)) << to_string(s);
    }
}

TEST(CheahMain, TheInverseHilbertGuessDoesNotReconcile)
{
    LocalSeriesData guess = surface_data(4);
    guess.pair_local = naive_mul(pair_candidate(4), naive_inverse(naive_mul(hilb_local_surface(4), hilb_local_surface(4))));
    EXPECT_NE(cheah_main(guess, MotivicClass(1L), 4).Z_pair(), incidence_series(MotivicClass(1L), 4));
}

TEST(CheahMain, RequiresPairDataOfSufficientOrder)
{
    LocalSeriesData missing = surface_data(4);
    missing.pair_local.reset();
    EXPECT_THROW(cheah_main(missing, MotivicClass(1L), 4), ContractError);
    EXPECT_THROW(cheah_main(surface_data(3), MotivicClass(1L), 4), ContractError);
    // longer local data is truncated to the requested order
    EXPECT_EQ(cheah_main(surface_data(6), MotivicClass(1L), 4).hilb(), cheah_main(surface_data(4), MotivicClass(1L), 4).hilb());
}

TEST(Incidence, Examples)
{
    Rng rng(113);
    for (int i = 0; i < 10; ++i) {
        const MotivicClass s = random_class(rng);
        const auto inc = incidence_series(s, 5);
        EXPECT_TRUE(inc.constant_term().is_zero());
        EXPECT_EQ(inc.coeff(1), s);
    }
    EXPECT_EQ(specialize_euler(incidence_series(MotivicClass(1L), 5)), longs({0, 1, 2, 4, 7, 12}));
    EXPECT_EQ(incidence_series(MotivicClass(), 5), MotivicSeries(BoxShape({5})));
}

TEST(Incidence, EulerShadowForAnyChi)
{
    for (long c = -2; c <= 3; ++c) {
        // c t/(1-t) prod (1-t^k)^{-c}, with the product as an ordinary power of the partition series
        IntegerSeries marked(BoxShape({6}));
        for (std::uint32_t j = 1; j <= 6; ++j) marked.set(ExponentVector{j}, Integer(c));
        const IntegerSeries expect = naive_mul(marked, ordinary_power(longs(partition_numbers(6)), c));
        EXPECT_EQ(specialize_euler(incidence_series(MotivicClass(c), 6)), expect) << "c=" << c;
    }
}

TEST(LiQin, CollapseCases)
{
    Rng rng(127);
    const LocalSeriesData local = surface_data(5);
    for (int i = 0; i < 6; ++i) {
        const MotivicClass s = random_class(rng), x = random_class(rng), c = random_class(rng);
        const MotivicSeries expect = power(local.hilb_local, x).scaled(s);
        EXPECT_EQ(li_qin_series(s, x, c, local, local.hilb_local, 5), expect);
        const auto m_local = random_unit_series<MotivicClass>(rng, BoxShape({5}));
        EXPECT_EQ(li_qin_series(s, x, MotivicClass(), local, m_local, 5), expect);
    }
}

TEST(LiQin, EulerShadow)
{
    Rng rng(131);
    const LocalSeriesData local = surface_data(5);
    for (int i = 0; i < 6; ++i) {
        const MotivicClass s = random_class(rng), x = random_class(rng), c = random_class(rng);
        const auto m_local = random_unit_series<MotivicClass>(rng, BoxShape({5}));
        const long ex = euler_spec(x).get_si(), ec = euler_spec(c).get_si();
        const IntegerSeries expect = naive_mul(ordinary_power(specialize_euler(local.hilb_local), ex - ec),
                                               ordinary_power(specialize_euler(m_local), ec))
                                         .scaled(euler_spec(s));
        EXPECT_EQ(specialize_euler(li_qin_series(s, x, c, local, m_local, 5)), expect);
    }
}

TEST(LiQin, RejectsNonUnitModuliSeries)
{
    auto m_local = hilb_local_surface(4);
    m_local.set(ExponentVector{0}, MotivicClass());
    EXPECT_THROW(li_qin_series(MotivicClass(1L), MotivicClass(1L), MotivicClass(1L), surface_data(4), m_local, 4), NonUnitConstant);
}
