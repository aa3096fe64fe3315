#include <benchmark/benchmark.h>

#include "ghostchar/ghost.hpp"

namespace {

using namespace ghostchar;

// Extended torus(4,5) points: index 0 is rational, the last is quadratic.
const std::vector<FullPoint>& corpus() {
  static const std::vector<FullPoint> points = [] {
    Diagram d = build_diagram(parse_braid("torus 4 5"));
    F2Presentation pres = symmetry_reduce(eliminate(d), d.closure_permutation);
    SolveResult s = solve_zero_dim(pres.polynomials(), pres.base_vars);
    std::vector<FullPoint> out;
    FullPoint quadratic;
    for (const auto& p : s.points) {
      FullPoint f = extend_point(pres, p);
      if (std::holds_alternative<ArcValues<Rational>>(f) && out.empty()) out.push_back(f);
      if (std::holds_alternative<ArcValues<QuadraticNumber>>(f)) quadratic = f;
    }
    out.push_back(quadratic);
    return out;
  }();
  return points;
}

template <Execution E>
void hexagon(benchmark::State& state) {
  const FullPoint& p = corpus().at(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    std::visit([](const auto& v) { benchmark::DoNotOptimize(hexagon_data(v, E)); }, p);
}

template <Execution E>
void rectangles(benchmark::State& state) {
  const FullPoint& p = corpus().at(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    std::visit([](const auto& v) { benchmark::DoNotOptimize(rectangle_values(v, E, true)); }, p);
}

template <Execution E>
void classify(benchmark::State& state) {
  const FullPoint& p = corpus().at(static_cast<std::size_t>(state.range(0)));
  ClassifyOptions opts;
  opts.execution = E;
  opts.all_rectangles = true;
  for (auto _ : state) benchmark::DoNotOptimize(classify_full_point(p, opts));
}

BENCHMARK(hexagon<Execution::Serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(hexagon<Execution::Parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(rectangles<Execution::Serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(rectangles<Execution::Parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(classify<Execution::Serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(classify<Execution::Parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
