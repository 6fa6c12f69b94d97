#include <powerstruct/config_oracle.hpp>
#include <powerstruct/motivic.hpp>
#include <powerstruct/orbifold.hpp>

#include <benchmark/benchmark.h>

using namespace powerstruct;

namespace {

MotivicSeries dense_series(std::uint32_t vars, std::uint32_t bound)
{
    const BoxShape box(std::vector<std::uint32_t>(vars, bound));
    MotivicSeries s = MotivicSeries::one(box);
    for (std::size_t idx = 1; idx < box.size(); ++idx) {
        s.set_index(idx, lefschetz(Rational(static_cast<std::int64_t>(idx % 5), 2), Integer(static_cast<long>(idx % 7) - 3)) + MotivicClass(1L));
    }
    return s;
}

void BM_Multiply(benchmark::State &state)
{
    const auto vars = static_cast<std::uint32_t>(state.range(0));
    const auto bound = static_cast<std::uint32_t>(state.range(1));
    const MotivicSeries a = dense_series(vars, bound);
    for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_Multiply)->Args({1, 16})->Args({1, 64})->Args({2, 8})->Args({3, 4});

void BM_Factorize(benchmark::State &state)
{
    const MotivicSeries a = dense_series(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(factorize(a));
}
BENCHMARK(BM_Factorize)->Args({1, 16})->Args({1, 32})->Args({2, 6})->Args({3, 3});

void BM_PowerMotivic(benchmark::State &state)
{
    const MotivicSeries a = dense_series(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
    const MotivicClass m = parse_class("1+L^{1/2}-2*L^2");
    for (auto _ : state) benchmark::DoNotOptimize(power(a, m));
}
BENCHMARK(BM_PowerMotivic)->Args({1, 12})->Args({1, 24})->Args({2, 5})->Args({3, 3});

void BM_HilbSurface(benchmark::State &state)
{
    const auto order = static_cast<std::uint32_t>(state.range(0));
    const MotivicClass x = projective_space(2);
    for (auto _ : state) benchmark::DoNotOptimize(hilb_global(x, hilb_local_surface(order)));
}
BENCHMARK(BM_HilbSurface)->Arg(8)->Arg(16);

void BM_WreathOracle(benchmark::State &state)
{
    const FiniteGroupAction action = FiniteGroupAction::symmetric(3);
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wreath_oracle_euler(action, n));
}
BENCHMARK(BM_WreathOracle)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ConfigCount(benchmark::State &state)
{
    FiniteCoefficientData d;
    d.m_size = 5;
    d.var_count = 2;
    for (std::uint32_t i = 0; i <= 3; ++i) {
        for (std::uint32_t j = 0; j <= 3; ++j) {
            if (i + j > 0) d.parts[ExponentVector{i, j}] = 1 + (i + 2 * j) % 3;
        }
    }
    const ExponentVector n{static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(config_count(d, n));
}
BENCHMARK(BM_ConfigCount)->DenseRange(3, 5);

} // namespace

BENCHMARK_MAIN();
