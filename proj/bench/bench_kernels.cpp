#include "gfadm/problem_file.hpp"
#include "gfadm/solver.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

gfadm::ProblemFile load(const char* name) {
    return gfadm::load_problem_file(std::string(GFADM_PROBLEMS) + "/" + name);
}

void run(benchmark::State& state, const char* name, gfadm::ExecutionPolicy policy) {
    const auto file = load(name);
    gfadm::SolveOptions opt = file.run;
    opt.n_terms = static_cast<int>(state.range(0));
    opt.execution = policy;
    for (auto _ : state) {
        auto sol = gfadm::gfadm_solve(file.spec, opt);
        benchmark::DoNotOptimize(sol);
    }
}

void BM_Example1Serial(benchmark::State& s) { run(s, "example1_k1.cfg", gfadm::ExecutionPolicy::serial); }
void BM_Example1Parallel(benchmark::State& s) { run(s, "example1_k1.cfg", gfadm::ExecutionPolicy::parallel); }
void BM_Example2Serial(benchmark::State& s) { run(s, "example2_alpha1.cfg", gfadm::ExecutionPolicy::serial); }
void BM_Example2Parallel(benchmark::State& s) { run(s, "example2_alpha1.cfg", gfadm::ExecutionPolicy::parallel); }
void BM_Example3Serial(benchmark::State& s) { run(s, "example3.cfg", gfadm::ExecutionPolicy::serial); }
void BM_Example3Parallel(benchmark::State& s) { run(s, "example3.cfg", gfadm::ExecutionPolicy::parallel); }

}  // namespace

BENCHMARK(BM_Example1Serial)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Example1Parallel)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Example2Serial)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Example2Parallel)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Example3Serial)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Example3Parallel)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
