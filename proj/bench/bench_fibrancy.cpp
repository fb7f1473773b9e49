// Serial reference against the OpenMP kernel on a few extension checks.

#include <benchmark/benchmark.h>

#include "complicial/catalog.hpp"
#include "complicial/lifting.hpp"
#include "complicial/nerve.hpp"

using namespace complicial;

namespace {

struct Case {
  const char* category;
  int extension;
};

// Indices into anodyne_library(2, 5): an inner horn and the last saturation member.
const Case kCases[] = {{"O2[3]", 4}, {"SigmaI", 4}, {"O2[3]", 43}, {"I", 43}};

const AnodyneExtension& extension(int i) {
  static const auto library = anodyne_library(2, 5);
  return library[i];
}

void BM_Serial(benchmark::State& state) {
  const auto& c = kCases[state.range(0)];
  const auto x = natural_nerve(example(c.category), 5);
  const auto& e = extension(c.extension);
  state.SetLabel(std::string(c.category) + " " + e.name);
  for (auto _ : state) benchmark::DoNotOptimize(check_extension_serial(e, x));
}

void BM_Parallel(benchmark::State& state) {
  const auto& c = kCases[state.range(0)];
  const auto x = natural_nerve(example(c.category), 5);
  const auto& e = extension(c.extension);
  state.SetLabel(std::string(c.category) + " " + e.name + " threads=" + std::to_string(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(check_extension(e, x, {}, static_cast<int>(state.range(1))));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
