#include <benchmark/benchmark.h>

#include <latloc/dirac1d.hpp>
#include <latloc/lattice.hpp>
#include <latloc/polytope.hpp>

namespace {

latloc::Polyhedron square(long long k) {
  using latloc::Int;
  std::vector<latloc::Halfspace> fs = {
      {{Int(1), Int(0)}, latloc::Rat(0)},
      {{Int(-1), Int(0)}, latloc::Rat(-k)},
      {{Int(0), Int(1)}, latloc::Rat(0)},
      {{Int(0), Int(-1)}, latloc::Rat(-k)},
  };
  return latloc::make_polyhedron(2, fs, "square");
}

void BM_lattice_points_square(benchmark::State& state) {
  latloc::Polyhedron p = square(state.range(0));
  for (auto _ : state) {
    auto pts = latloc::lattice_points(p);
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(BM_lattice_points_square)->Arg(10)->Arg(40);

void BM_vertices_square(benchmark::State& state) {
  latloc::Polyhedron p = square(5);
  for (auto _ : state) {
    auto vs = latloc::vertices(p);
    benchmark::DoNotOptimize(vs);
  }
}
BENCHMARK(BM_vertices_square);

void BM_hermite_normal_form(benchmark::State& state) {
  using latloc::Int;
  latloc::IMat m = {{Int(2), Int(4), Int(4)},
                    {Int(-6), Int(6), Int(12)},
                    {Int(10), Int(4), Int(16)}};
  for (auto _ : state) {
    auto h = latloc::hermite_normal_form(m);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_hermite_normal_form);

void BM_compute_index_small(benchmark::State& state) {
  latloc::ModelSpec1D spec;
  spec.kind = latloc::ModelKind::cylinder;
  spec.rho = 0;
  spec.tau = 1;
  spec.grid.n = (int)state.range(0);
  for (auto _ : state) {
    auto r = latloc::compute_index(spec);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_compute_index_small)->Arg(257)->Arg(1001);

}  // namespace

BENCHMARK_MAIN();
