#include "ordbraid/cluster.hpp"
#include "ordbraid/dehornoy.hpp"
#include "ordbraid/link.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ordbraid;

namespace {

std::vector<BraidWord> random_words(int strands, int length, std::size_t count)
{
	std::mt19937_64 rng(7);
	std::uniform_int_distribution<int> gen(1, strands - 1);
	std::vector<BraidWord> out;
	for (std::size_t c = 0; c < count; ++c) {
		std::vector<int> w;
		for (int j = 0; j < length; ++j)
			w.push_back(rng() % 2 ? gen(rng) : -gen(rng));
		out.emplace_back(strands, std::move(w));
	}
	return out;
}

void BM_HandleReduce(benchmark::State &state)
{
	auto words = random_words(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 64);
	std::size_t i = 0;
	for (auto _ : state)
		benchmark::DoNotOptimize(handle_reduce(words[i++ % words.size()]));
}
BENCHMARK(BM_HandleReduce)->Args({3, 16})->Args({4, 16})->Args({4, 64})->Args({6, 64});

void BM_LaminationSign(benchmark::State &state)
{
	auto words = random_words(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 64);
	std::size_t i = 0;
	for (auto _ : state)
		benchmark::DoNotOptimize(lamination_sign(words[i++ % words.size()]));
}
BENCHMARK(BM_LaminationSign)->Args({3, 16})->Args({4, 16})->Args({4, 64})->Args({6, 64});

void BM_Jones(benchmark::State &state)
{
	auto words = random_words(4, static_cast<int>(state.range(0)), 16);
	std::size_t i = 0;
	for (auto _ : state)
		benchmark::DoNotOptimize(jones(words[i++ % words.size()]));
}
BENCHMARK(BM_Jones)->Arg(8)->Arg(16)->Arg(24);

void BM_Homfly(benchmark::State &state)
{
	auto words = random_words(3, static_cast<int>(state.range(0)), 16);
	std::size_t i = 0;
	for (auto _ : state)
		benchmark::DoNotOptimize(homfly(words[i++ % words.size()]));
}
BENCHMARK(BM_Homfly)->Arg(6)->Arg(10)->Arg(14);

void BM_MutateTorus(benchmark::State &state)
{
	auto start = surface_preset(Surface::Torus1);
	const auto depth = static_cast<std::size_t>(state.range(0));
	for (auto _ : state) {
		auto s = start;
		for (std::size_t d = 0; d < depth; ++d)
			s = mutate(s, d % 3 + 1);
		benchmark::DoNotOptimize(s);
	}
}
BENCHMARK(BM_MutateTorus)->Arg(4)->Arg(6)->Arg(8);

void BM_PositivityAudit(benchmark::State &state)
{
	auto start = surface_preset(Surface::Torus1);
	for (auto _ : state)
		benchmark::DoNotOptimize(positivity_audit(start, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PositivityAudit)->Arg(4)->Arg(6);

} // namespace
BENCHMARK_MAIN();
