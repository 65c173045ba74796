#include <benchmark/benchmark.h>

#include <permblocks/covering.hpp>
#include <permblocks/fusion.hpp>
#include <permblocks/monodromy.hpp>
#include <permblocks/perm.hpp>
#include <permblocks/sewing.hpp>
#include <permblocks/twisted.hpp>

#include <numeric>
#include <random>
#include <vector>

using namespace permblocks;

namespace {

Permutation random_perm(std::mt19937_64 &rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

MonodromyData random_data(std::mt19937_64 &rng, std::size_t ground,
                          std::size_t count) {
  std::vector<Permutation> gens;
  Permutation prefix = Permutation::identity(ground);
  for (std::size_t j = 0; j + 1 < count; ++j) {
    gens.push_back(random_perm(rng, ground));
    prefix = compose(prefix, gens.back());
  }
  gens.push_back(prefix.inverse());
  std::vector<MarkedPoint> points;
  for (std::size_t j = 0; j < count; ++j)
    points.push_back({"p" + std::to_string(j + 1), ""});
  return build_monodromy(IndexSet(ground), std::move(points), std::move(gens));
}

FusionRing ising_ring() {
  FusionRing ring;
  ring.name = "ising";
  ring.labels = {"1", "eps", "sigma"};
  ring.unit = 0;
  ring.dual = {0, 1, 2};
  ring.coeffs.assign(27, 0);
  auto set = [&](std::size_t a, std::size_t b, std::size_t c, unsigned long v) {
    ring.coeffs[(a * 3 + b) * 3 + c] = Integer(v);
  };
  for (std::size_t a = 0; a < 3; ++a) {
    set(0, a, a, 1);
    set(a, 0, a, 1);
  }
  set(1, 1, 0, 1);
  set(1, 2, 2, 1);
  set(2, 1, 2, 1);
  set(2, 2, 0, 1);
  set(2, 2, 1, 1);
  return ring;
}

void bm_parse_cycles(benchmark::State &state) {
  IndexSet ground(12);
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_cycles("(1 4 7 10)(2 5 8 11)(3 6 9 12)", ground));
}

void bm_build_covering(benchmark::State &state) {
  std::mt19937_64 rng(7);
  std::vector<MonodromyData> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(random_data(rng, 8, 5));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_covering(inputs[i]));
    i = (i + 1) % inputs.size();
  }
}

void bm_block_dim_cold(benchmark::State &state) {
  const auto ring = ising_ring();
  const std::vector<std::size_t> insertions(8, 2);
  for (auto _ : state) {
    DimCache cache(ring);
    benchmark::DoNotOptimize(cache.block_dim(2, insertions));
  }
}

void bm_block_dim_warm(benchmark::State &state) {
  const auto ring = ising_ring();
  DimCache cache(ring);
  const std::vector<std::size_t> insertions(8, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(cache.block_dim(2, insertions));
}

void bm_twisted_dim(benchmark::State &state) {
  const auto ring = ising_ring();
  DimCache cache(ring);
  IndexSet ground(4);
  const Permutation a = parse_cycles("(1 2 3 4)", ground);
  const Permutation b = parse_cycles("(1 3)(2 4)", ground);
  auto data = build_monodromy(
      ground, {{"x1", ""}, {"x2", ""}, {"x3", ""}, {"x4", ""}},
      {a, b, a, compose(compose(a, b), a).inverse()});
  ModuleAssignment assignment;
  for (std::size_t j = 0; j < data.point_count(); ++j)
    for (const auto &orbit : data.point_orbits(j))
      assignment[{j, orbit.front()}] = 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(twisted_block_dim(data, cache, assignment));
}

void bm_sew_and_compare(benchmark::State &state) {
  std::mt19937_64 rng(11);
  std::vector<SewSpec> specs;
  for (int i = 0; i < 64; ++i) {
    auto left = random_data(rng, 6, 3);
    const Permutation h0 = left.gen(0).inverse();
    const Permutation r = random_perm(rng, 6);
    std::vector<Permutation> gens{h0, r, compose(h0, r).inverse()};
    auto right = build_monodromy(
        IndexSet(6), {{"q1", ""}, {"q2", ""}, {"q3", ""}}, std::move(gens));
    specs.push_back(SewSpec{std::move(left), std::move(right), 0, 0});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(covering_commutes(specs[i]));
    i = (i + 1) % specs.size();
  }
}

} // namespace

BENCHMARK(bm_parse_cycles);
BENCHMARK(bm_build_covering);
BENCHMARK(bm_block_dim_cold);
BENCHMARK(bm_block_dim_warm);
BENCHMARK(bm_twisted_dim);
BENCHMARK(bm_sew_and_compare);

BENCHMARK_MAIN();
