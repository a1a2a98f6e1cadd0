#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "abc/bpi.hpp"
#include "abc/equivalence.hpp"
#include "abc/eval.hpp"
#include "abc/lts.hpp"
#include "abc/parser.hpp"

using namespace abc;

namespace {

System load(const std::string& rel) {
  std::ifstream in(std::string(ABC_CORPUS_DIR) + "/" + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  auto s = parse_abc(ss.str());
  check_definitions(s.defs);
  check_component(*s.root, s.defs);
  return s;
}

void BM_SolverEquiv(benchmark::State& state) {
  auto a = parse_predicate("(a < 3 && b in {1, 2, 3}) || (c == \"x\" && a != b)");
  auto b = parse_predicate("!(!(a < 3 && b in {1, 2, 3}) && !(c == \"x\" && a != b))");
  for (auto _ : state) {
    Solver solver;  // fresh cache per iteration
    benchmark::DoNotOptimize(solver.equiv(a, b));
  }
}
BENCHMARK(BM_SolverEquiv);

void BM_ExploreNetwork(benchmark::State& state) {
  auto s = load("abc/forwarding_intruder.abc");
  auto prog = s.program();
  Solver solver;
  auto u = shared_alphabet({{s.root, &prog}}, solver);
  ExploreOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(explore({s.root, &prog}, u, solver, opts).state_count());
}
BENCHMARK(BM_ExploreNetwork)->Arg(1)->Arg(2);

void BM_WeakBisimNetwork(benchmark::State& state) {
  auto l = load("abc/forwarding_intruder.abc");
  auto r = load("abc/forwarding_spec_intruder.abc");
  auto lp = l.program(), rp = r.program();
  Solver solver;
  for (auto _ : state) benchmark::DoNotOptimize(weak_bisim({l.root, &lp}, {r.root, &rp}, solver).equivalent);
}
BENCHMARK(BM_WeakBisimNetwork);

void BM_EncodingCorrespondence(benchmark::State& state) {
  auto prog = bpi::lift(bpi::parse_bpi("(rec A<x>. x!<x>.A<x>)<a> || a(y).y!<y>.nil || a(z).nil + b!<c>.nil"));
  for (auto _ : state) benchmark::DoNotOptimize(bpi::correspondence_check(prog).ok);
}
BENCHMARK(BM_EncodingCorrespondence);

}  // namespace

BENCHMARK_MAIN();
