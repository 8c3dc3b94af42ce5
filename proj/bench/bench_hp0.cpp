// Parallel (OpenMP rows, sparse echelon) vs serial (dense elimination) trace spaces.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "ptrace/catalog.hpp"
#include "ptrace/hp0_kernels.hpp"

using namespace ptrace;

namespace {

struct Case {
  const char* example;
  long max_degree;
};

const Case kCases[] = {
    {"elliptic-cone", 10},
    {"elliptic-cone", 16},
    {"symplectic:2", 8},
    {"klein-e:8", 90},
    {"cyclic-quotient:5", 16},
};

void BM_trace_space(benchmark::State& state, Execution exec) {
  const Case& c = kCases[state.range(0)];
  Document doc = example(c.example);
  const auto& P = *doc.presentation;
  std::vector<Mover> movers;
  const FiniteMatrixGroup* group = nullptr;
  if (doc.group) {
    MorphismPresentation M = morphism_of(doc);
    for (std::size_t j = 0; j < M.images().size(); ++j) movers.push_back({M.images()[j], M.degrees()[j]});
    group = &*doc.group;
  } else {
    for (std::size_t i = 0; i < P.nvars(); ++i) movers.push_back({Poly::variable(P.ring(), i), P.ring()->weights()[i]});
  }
  std::size_t total = 0;
  for (auto _ : state) {
    TraceDims t = trace_space_dims(P, movers, c.max_degree, group, exec);
    total = 0;
    for (auto d : t.per_degree) total += d;
    benchmark::DoNotOptimize(total);
  }
  state.SetLabel(std::string(c.example) + " M=" + std::to_string(c.max_degree) + " total=" + std::to_string(total) +
                 " threads=" + std::to_string(exec == Execution::Parallel ? omp_get_max_threads() : 1));
}

}  // namespace

BENCHMARK_CAPTURE(BM_trace_space, serial, Execution::Serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_trace_space, parallel, Execution::Parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
