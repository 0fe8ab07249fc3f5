// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "pentagon/gallery.hpp"
#include "pentagon/heisenberg.hpp"
#include "pentagon/kernels.hpp"
#include "pentagon/tensor.hpp"

namespace {

using namespace pentagon;

// R^{12} and R^{13} of a conjugated Sweedler solution: the shapes the legs
// pentagon check multiplies.
std::pair<Mat, Mat> legs_operands(Field f) {
    const Tensor2 r = conjugate_action(gallery::sweedler4(f), gallery::random_conjugator(4, f, 7));
    return {leg_embed(r, Leg::L12).entries(), leg_embed(r, Leg::L13).entries()};
}

template <Mat (*Kernel)(const Mat&, const Mat&)>
void BM_Multiply(benchmark::State& state) {
    const Field f = state.range(0) == 0 ? Field::rationals() : Field::prime(7);
    const auto [a, b] = legs_operands(f);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

template <kernels::CubeElement (*Kernel)(const kernels::SparseMult&, const kernels::CubeElement&,
                                         const kernels::CubeElement&)>
void BM_CubeMultiply(benchmark::State& state) {
    const HeisenbergDouble d = build_double(state.range(0) == 0 ? gallery::group_hopf(Field::rationals(), 3)
                                                                : gallery::sweedler_hopf(Field::rationals()));
    const std::size_t n = d.dim;
    kernels::CubeElement c12 = zero_vec(d.base.field, n * n * n);
    kernels::CubeElement c23 = c12;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                c12[(x * n + y) * n + z] = d.canon[x * n + y] * d.unit[z];
                c23[(z * n + x) * n + y] = d.unit[z] * d.canon[x * n + y];
            }
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(d.mult, c23, c12));
}

}  // namespace

BENCHMARK(BM_Multiply<kernels::multiply_serial>)->Name("multiply/serial")->Arg(0)->Arg(1);
BENCHMARK(BM_Multiply<kernels::multiply_parallel>)->Name("multiply/parallel")->Arg(0)->Arg(1);
BENCHMARK(BM_CubeMultiply<kernels::cube_multiply_serial>)->Name("cube/serial")->Arg(0)->Arg(1);
BENCHMARK(BM_CubeMultiply<kernels::cube_multiply_parallel>)->Name("cube/parallel")->Arg(0)->Arg(1);

BENCHMARK_MAIN();
