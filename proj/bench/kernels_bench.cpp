// Serial vs parallel kernels. The `threads` argument pins the OpenMP team size,
// so threads:1 is the serial baseline of the same code path; the reference::
// variants are the plain single-threaded implementations.

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcplan/data.hpp"
#include "pcplan/reference.hpp"
#include "pcplan/search.hpp"

using namespace pcplan;

namespace {

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_num_procs();
#else
  return 1;
#endif
}

PointSet random_points(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  PointSet p(n);
  for (auto& v : p) v = Vec3(rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1), rng.uniform(0.0, 0.1));
  return p;
}

void thread_args(benchmark::internal::Benchmark* b) {
  for (int t = 1; t <= max_threads(); t *= 2) b->Arg(t);
  if ((max_threads() & (max_threads() - 1)) != 0) b->Arg(max_threads());
}

void BM_ChamferKdTree(benchmark::State& state) {
  set_threads(static_cast<int>(state.range(0)));
  const auto a = random_points(4096, 1), b = random_points(4096, 2);
  for (auto _ : state) benchmark::DoNotOptimize(chamfer_distance(a, b));
  state.counters["threads"] = static_cast<double>(state.range(0));
}
BENCHMARK(BM_ChamferKdTree)->Apply(thread_args)->UseRealTime();

void BM_ChamferBruteForceSerial(benchmark::State& state) {
  const auto a = random_points(4096, 1), b = random_points(4096, 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::chamfer_distance(a, b));
}
BENCHMARK(BM_ChamferBruteForceSerial)->UseRealTime();

struct Tracks {
  PointSet src, dst;
};

Tracks ransac_input() {
  Tracks t{random_points(2000, 3), {}};
  const auto truth = RigidTransform::from_yaw(0.7, Vec3(0.05, -0.02, 0.01));
  Rng rng(4);
  for (std::size_t i = 0; i < t.src.size(); ++i)
    t.dst.push_back(i % 10 < 3 ? Vec3(rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2), rng.uniform(0.0, 0.2))
                               : truth.apply(t.src[i]));
  return t;
}

void BM_Ransac(benchmark::State& state) {
  set_threads(static_cast<int>(state.range(0)));
  const auto t = ransac_input();
  for (auto _ : state) benchmark::DoNotOptimize(estimate_rigid_transform(t.src, t.dst));
}
BENCHMARK(BM_Ransac)->Apply(thread_args)->UseRealTime();

void BM_RansacSerial(benchmark::State& state) {
  const auto t = ransac_input();
  for (auto _ : state) benchmark::DoNotOptimize(reference::estimate_rigid_transform(t.src, t.dst));
}
BENCHMARK(BM_RansacSerial)->UseRealTime();

void BM_FarthestPoint(benchmark::State& state) {
  set_threads(static_cast<int>(state.range(0)));
  const auto p = random_points(20000, 5);
  for (auto _ : state) benchmark::DoNotOptimize(farthest_point_sample(p, 1024, 6));
}
BENCHMARK(BM_FarthestPoint)->Apply(thread_args)->UseRealTime();

void BM_FarthestPointSerial(benchmark::State& state) {
  const auto p = random_points(20000, 5);
  for (auto _ : state) benchmark::DoNotOptimize(reference::farthest_point_sample(p, 1024, 6));
}
BENCHMARK(BM_FarthestPointSerial)->UseRealTime();

// One A* node expansion on a bussing scene with fitted models (k * M children).
void BM_ExpandNode(benchmark::State& state) {
  set_threads(static_cast<int>(state.range(0)));
  static const auto fixture = [] {
    const auto spec = family_spec("table_bussing_2plate", 0);
    const auto demos = generate_demonstrations(spec, tower_script(), 60, 7);
    struct F {
      ObjectSuggesterModel object;
      PlacementSuggesterModel placement;
      SearchNode root;
    } f{fit_object_suggester(demos), fit_placement_suggester(demos), {}};
    f.root.cloud = generate_scene(family_spec("table_bussing_2plate", 8));
    return f;
  }();
  const auto task = default_task_spec(TaskKind::TableBussing);
  SearchParams params = default_search_params(TaskKind::TableBussing);
  params.k = 10;
  const Planners planners{&fixture.object, &fixture.placement, nullptr};
  for (auto _ : state) benchmark::DoNotOptimize(expand_node(fixture.root, task, planners, params, 9));
}
BENCHMARK(BM_ExpandNode)->Apply(thread_args)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
