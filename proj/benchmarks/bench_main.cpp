#include <benchmark/benchmark.h>

#include <cstdlib>

#include "monotile/fixtures.hpp"
#include "monotile/kite.hpp"
#include "monotile/laves.hpp"
#include "monotile/render.hpp"
#include "monotile/search.hpp"
#include "monotile/signature.hpp"
#include "monotile/tilefamily.hpp"
#include "monotile/tiling.hpp"

using namespace monotile;

namespace {

void use_source_data() { setenv("MONOTILE_DATA_DIR", MONOTILE_BENCH_DATA_DIR, 0); }

void BM_QS3Multiply(benchmark::State& state) {
  const QS3 x = parse_qs3("3/7 - 5/11*sqrt3");
  const QS3 y = parse_qs3("13/2 + 1/3*sqrt3");
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_QS3Multiply);

void BM_QS3Divide(benchmark::State& state) {
  const QS3 x = parse_qs3("3/7 - 5/11*sqrt3");
  const QS3 y = parse_qs3("13/2 + 1/3*sqrt3");
  for (auto _ : state) benchmark::DoNotOptimize(x / y);
}
BENCHMARK(BM_QS3Divide);

void BM_QS3Sign(benchmark::State& state) {
  const QS3 x = parse_qs3("1351/780 - sqrt3");
  for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_QS3Sign);

void BM_BuildTile(benchmark::State& state) {
  const TileParam a(parse_qs3("37/100"));
  for (auto _ : state) benchmark::DoNotOptimize(build_tile(a));
}
BENCHMARK(BM_BuildTile);

void BM_SimilarityHat(benchmark::State& state) {
  use_source_data();
  const Polygon outline = normalize_polygon(boundary(assemble(read_assembly_fixture(NamedTile::kHat).spec)));
  const Polygon hat = named_tile(NamedTile::kHat).normalized;
  for (auto _ : state) benchmark::DoNotOptimize(similarity_between(hat, outline));
}
BENCHMARK(BM_SimilarityHat);

void BM_SearchHat(benchmark::State& state) {
  const Signature target = canonical_signature(named_tile(NamedTile::kHat).normalized, SignatureMode::kSimilarity);
  for (auto _ : state) benchmark::DoNotOptimize(search_assembly(target, 8, 1000000));
}
BENCHMARK(BM_SearchHat)->Unit(benchmark::kMillisecond);

void BM_Dual3464(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dual(patch_3464(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_Dual3464)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_VerifyChevronPatch(benchmark::State& state) {
  use_source_data();
  const PlacementFixture fixture = read_placements(periodic_fixture_path(NamedTile::kT10));
  for (auto _ : state) benchmark::DoNotOptimize(verify_patch(fixture.placements));
}
BENCHMARK(BM_VerifyChevronPatch)->Unit(benchmark::kMillisecond);

void BM_SceneToSvg(benchmark::State& state) {
  const Scene scene = faces_scene(dual(patch_3464(3)).faces);
  for (auto _ : state) benchmark::DoNotOptimize(scene_to_svg(scene));
}
BENCHMARK(BM_SceneToSvg)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
