#include "singindex/burnside.hpp"
#include "singindex/icis_index.hpp"
#include "singindex/parse.hpp"
#include "singindex/smooth_index.hpp"
#include "singindex/standard_basis.hpp"
#include "singindex/strat.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

using namespace singindex;

namespace {

std::vector<Polynomial> polys(const Context& ctx, const std::vector<std::string>& texts) {
  return parse_polynomials(texts, ctx);
}

void BM_LocalColengthPurePowers(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const auto ctx = make_context({"x", "y", "z"});
  const auto e = std::to_string(k);
  const auto gens = polys(ctx, {"x^" + e + " + y*z", "y^" + e + " + x*z^2", "z^" + e + " + x*y"});
  for (auto _ : state) benchmark::DoNotOptimize(gb::colength(gb::Ideal(gens)));
}
BENCHMARK(BM_LocalColengthPurePowers)->DenseRange(2, 6);

void BM_GlobalColength(benchmark::State& state) {
  const auto ctx = make_context({"x", "y", "z"});
  const auto gens = polys(ctx, {"x^3 - y*z + 1", "y^3 - x*z", "z^3 - x*y - 2"});
  for (auto _ : state) benchmark::DoNotOptimize(gb::colength(gb::Ideal(gens, gb::Locality::Global)));
}
BENCHMARK(BM_GlobalColength);

void BM_ElkIndex(benchmark::State& state) {
  const auto ctx = make_context({"x", "y"});
  smooth::VectorFieldGerm f;
  f.components = polys(ctx, {"x^3 - 3*x*y^2", "3*x^2*y - y^3"});
  f.field = smooth::GroundField::Real;
  for (auto _ : state) benchmark::DoNotOptimize(smooth::elk_index(f));
}
BENCHMARK(BM_ElkIndex);

void BM_GsvIndex(benchmark::State& state) {
  const auto ctx = make_context({"x", "y", "z"});
  icis::ICISGerm v{ctx, polys(ctx, {"x^2 + y^2 + z^3"})};
  smooth::OneFormGerm w;
  w.coefficients = polys(ctx, {"0", "0", "1"});
  for (auto _ : state) benchmark::DoNotOptimize(icis::gsv_index_1form(v, w));
}
BENCHMARK(BM_GsvIndex);

void BM_MilnorNumber(benchmark::State& state) {
  const auto ctx = make_context({"x", "y", "z"});
  icis::ICISGerm v{ctx, polys(ctx, {"x^2 + y^2 + z^2", "x*y + z^3"})};
  for (auto _ : state) benchmark::DoNotOptimize(icis::milnor_number(v, 1));
}
BENCHMARK(BM_MilnorNumber);

void BM_MobiusInverse(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const auto data = strat::determinantal_slice_data(m, m, m);
  for (auto _ : state) benchmark::DoNotOptimize(strat::mobius_inverse(data));
}
BENCHMARK(BM_MobiusInverse)->DenseRange(2, 5);

void BM_BurnsideRingS4(benchmark::State& state) {
  for (auto _ : state) {
    const auto ring = burnside::BurnsideRing::create(burnside::FiniteGroup(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}));
    benchmark::DoNotOptimize(ring->size());
  }
}
BENCHMARK(BM_BurnsideRingS4);

void BM_BurnsideProductsS4(benchmark::State& state) {
  const auto ring = burnside::BurnsideRing::create(burnside::FiniteGroup(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}));
  for (auto _ : state)
    for (std::size_t a = 0; a < ring->size(); ++a)
      for (std::size_t b = 0; b < ring->size(); ++b)
        benchmark::DoNotOptimize(burnside::burnside_mul(burnside::BurnsideElement::basis(ring, a),
                                                        burnside::BurnsideElement::basis(ring, b)));
}
BENCHMARK(BM_BurnsideProductsS4);

}  // namespace
BENCHMARK_MAIN();
