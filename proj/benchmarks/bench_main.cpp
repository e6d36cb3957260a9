#include <parahiggs/bridge.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace parahiggs;

namespace {

RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rat(static_cast<long>(gen() % 11) - 5, static_cast<long>(gen() % 3) + 1);
    return m;
}

MarkedCurve test_curve(int g, int n) {
    const HyperellipticCurve c(Poly::monomial(Rat(1), 2 * g + 1) - Poly::x() + Poly(Rat(1)));
    const std::vector<CurvePoint> all{CurvePoint::affine(c, Rat(0), Rat(1)), CurvePoint::affine(c, Rat(1), Rat(1)),
                                      CurvePoint::affine(c, Rat(-1), Rat(1))};
    return MarkedCurve(c, std::vector<CurvePoint>(all.begin(), all.begin() + n));
}

void BM_KernelBasis(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const RatMatrix m = random_matrix(n, n + 4, 42);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(8)->Arg(16)->Arg(32);

void BM_QuadBasis(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(test_curve(g, 2).omega2().dim());
}
BENCHMARK(BM_QuadBasis)->Arg(1)->Arg(2)->Arg(3);

void BM_BaseExactness(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(HitchinBase(test_curve(2, 2)).exactness());
}
BENCHMARK(BM_BaseExactness);

void BM_SugawaraTrueVacuum(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // fresh module each round so the memo tables start empty
        const auto T = AffineModule::true_vacuum(1);
        for (const auto& m : T.basis(d)) benchmark::DoNotOptimize(T.sugawara(-2, 1, T.basis_vector(m)));
    }
}
BENCHMARK(BM_SugawaraTrueVacuum)->Arg(2)->Arg(3)->Arg(4);

void BM_SingularVectors(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(singular_vectors(AffineModule::true_vacuum(1), d));
}
BENCHMARK(BM_SingularVectors)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
