#include <benchmark/benchmark.h>

#include "precat/compose.hpp"
#include "precat/enumerate.hpp"
#include "precat/oracle.hpp"
#include "precat/polyplex.hpp"

using namespace precat;

namespace {

Polygraph two_squares() {
  Polygraph P;
  P.add(Generator{"x", 0, nullptr, nullptr});
  P.add(Generator{"y", 0, nullptr, nullptr});
  P.add(Generator{"z", 0, nullptr, nullptr});
  P.add(Generator{"f", 1, make_point("x"), make_point("y")});
  P.add(Generator{"f'", 1, make_point("x"), make_point("y")});
  P.add(Generator{"g", 1, make_point("y"), make_point("z")});
  P.add(Generator{"g'", 1, make_point("y"), make_point("z")});
  P.add(Generator{"phi", 2, generator_cell(P, 1, "f"), generator_cell(P, 1, "f'")});
  P.add(Generator{"psi", 2, generator_cell(P, 1, "g"), generator_cell(P, 1, "g'")});
  return P;
}

void BM_NormalizeExpr(benchmark::State& state) {
  Polygraph P = two_squares();
  std::vector<ExprPtr> exprs;
  for (uint64_t seed = 1; seed <= 64; ++seed)
    exprs.push_back(random_expr(P, seed, static_cast<int>(state.range(0))));
  size_t at = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize_expr(P, exprs[at]));
    at = (at + 1) % exprs.size();
  }
}
BENCHMARK(BM_NormalizeExpr)->Arg(8)->Arg(16)->Arg(24);

void BM_ComposeChain(benchmark::State& state) {
  Polygraph P = two_squares();
  CellPtr a = compose(P, generator_cell(P, 2, "phi"), 0, generator_cell(P, 1, "g"));
  CellPtr b = compose(P, generator_cell(P, 1, "f'"), 0, generator_cell(P, 2, "psi"));
  for (auto _ : state) {
    CellPtr c = compose(P, a, 1, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ComposeChain);

void BM_PolyplexLift(benchmark::State& state) {
  Polygraph P = two_squares();
  CellPtr u = compose(P, compose(P, generator_cell(P, 2, "phi"), 0, generator_cell(P, 1, "g")),
                      1, compose(P, generator_cell(P, 1, "f'"), 0, generator_cell(P, 2, "psi")));
  for (auto _ : state) {
    PolyplexLifting L = polyplex_lift({P, u});
    benchmark::DoNotOptimize(L);
  }
}
BENCHMARK(BM_PolyplexLift);

void BM_EnumerateCells(benchmark::State& state) {
  Polygraph P = two_squares();
  EnumBounds b;
  b.max_chain = static_cast<int>(state.range(0));
  b.max_slot_chain = 2;
  for (auto _ : state) {
    auto cells = enumerate_cells(P, 2, b);
    benchmark::DoNotOptimize(cells);
  }
}
BENCHMARK(BM_EnumerateCells)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
