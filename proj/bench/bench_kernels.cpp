// Serial against OpenMP-parallel runs of the grid kernels. The second
// argument of each benchmark is 0 for the serial loop and 1 for the parallel one.

#include "normvol/constructions.hpp"
#include "normvol/functionals.hpp"
#include "normvol/girth.hpp"
#include "normvol/random_family.hpp"
#include "normvol/sphere_grid.hpp"

#include <benchmark/benchmark.h>

using namespace normvol;

namespace {

ConvexBody body(int dim) {
    RandomFamily f;
    f.dim = dim;
    f.vertices = dim == 2 ? 10 : 12;
    return generate_convex(f, 3);
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void BM_DualIsoperimetrix(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto b = body(dim);
    const auto grid = default_grid(dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dual_isoperimetrix_radial(VolumeDefinition(VolumeId::busemann), b, grid, exec_of(state)));
    }
}

void BM_Isoperimetrix(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto b = body(dim);
    const auto grid = make_sphere_grid(dim, dim == 2 ? 720 : 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(isoperimetrix(VolumeDefinition(VolumeId::holmes_thompson), b, grid, exec_of(state)));
    }
}

void BM_DualSurfaceAreaDirect(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto b = body(dim);
    RandomFamily f;
    f.dim = dim;
    f.seed = 7;
    const auto s = generate_convex(f, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dual_surface_area_direct(VolumeDefinition(VolumeId::busemann), s, b, exec_of(state)));
    }
}

void BM_Girth3(benchmark::State& state) {
    const auto b = body(3);
    GirthOptions opt;
    opt.mesh_level = 3;
    opt.plane_seeds = 8;
    opt.curve_points = 128;
    opt.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(quotient_girth(b, opt).length);
}

}  // namespace

BENCHMARK(BM_DualIsoperimetrix)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Isoperimetrix)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualSurfaceAreaDirect)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Girth3)->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
