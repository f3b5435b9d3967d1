#include "ordbraid/cluster.hpp"
#include "ordbraid/error.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace ordbraid;
using ordbraid::testing::Gen;

namespace {

const ExchangeMatrix kMarkov({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});

} // namespace

TEST_CASE("exchange matrix validation")
{
	CHECK(is_skew_symmetric({{0, 1}, {-1, 0}}));
	CHECK_FALSE(is_skew_symmetric({{0, 1}, {1, 0}}));
	CHECK_FALSE(is_skew_symmetric({{1}}));
	CHECK_FALSE(is_skew_symmetric({{0, 1}}));
	CHECK_THROWS_AS(ExchangeMatrix({{0, 1}, {1, 0}}), InputError);
	CHECK_THROWS_AS(kMarkov.mutated(3), InputError);
}

TEST_CASE("Markov seed mutation")
{
	auto s0 = Seed::initial(kMarkov);
	auto s1 = mutate(s0, 1);
	CHECK(canonical_text(s1.variables[0]) == "x1^-1*x3^2 + x1^-1*x2^2");
	CHECK(s1.variables[1] == s0.variables[1]);
	CHECK(s1.variables[2] == s0.variables[2]);
	CHECK(s1.matrix == ExchangeMatrix({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}}));
	CHECK(mutate(s1, 1) == s0);
	CHECK_THROWS_AS(mutate(s0, 0), InputError);
	CHECK_THROWS_AS(mutate(s0, 4), InputError);
}

TEST_CASE("matrix mutation rule")
{
	ExchangeMatrix a2({{0, 1}, {-1, 0}});
	CHECK(a2.mutated(0) == ExchangeMatrix({{0, -1}, {1, 0}}));
	// b_ij' = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2 off the k-th row and column
	ExchangeMatrix a3({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
	CHECK(a3.mutated(1) == ExchangeMatrix({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST_CASE("A2 pentagon")
{
	// type A2 has period 5 under alternating mutations, up to swapping the two variables
	auto s = Seed::initial(ExchangeMatrix({{0, 1}, {-1, 0}}));
	auto cur = s;
	for (std::size_t step = 0; step < 5; ++step)
		cur = mutate(cur, step % 2 + 1);
	CHECK(cur.variables[0] == s.variables[1]);
	CHECK(cur.variables[1] == s.variables[0]);
	auto x = mutate(s, 1).variables[0];
	CHECK(canonical_text(x) == "x1^-1 + x1^-1*x2^1");
}

TEST_CASE("random involution and skew-symmetry")
{
	Gen gen(41);
	for (int t = 0; t < 200; ++t) {
		auto s = gen.coin() ? surface_preset(Surface::Torus1) : surface_preset(Surface::Annulus2);
		int depth = gen.uniform(0, 5);
		for (int d = 0; d < depth; ++d)
			s = mutate(s, static_cast<std::size_t>(gen.uniform(1, static_cast<int>(s.variables.size()))));
		CHECK(is_skew_symmetric(s.matrix.entries()));
		auto k = static_cast<std::size_t>(gen.uniform(1, static_cast<int>(s.variables.size())));
		CHECK(mutate(mutate(s, k), k) == s);
	}
}

TEST_CASE("triangulation matrices")
{
	CHECK(matrix_from_triangulation(preset_triangulation(Surface::Torus1)) == kMarkov);
	CHECK(matrix_from_triangulation(preset_triangulation(Surface::Annulus2)) ==
	      ExchangeMatrix({{0, 2}, {-2, 0}}));

	constexpr int B = Triangulation::kBoundary;
	Triangulation one{3, {{0, 1, 2}}};
	CHECK(matrix_from_triangulation(one) == ExchangeMatrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
	Triangulation with_boundary{1, {{0, B, B}}};
	CHECK(matrix_from_triangulation(with_boundary) == ExchangeMatrix(std::vector<std::vector<int>>{{0}}));
	CHECK_THROWS_AS(matrix_from_triangulation(Triangulation{1, {{0, 3, B}}}), InputError);
}

TEST_CASE("surface presets")
{
	CHECK(parse_surface("torus-1") == Surface::Torus1);
	CHECK(parse_surface("annulus-2") == Surface::Annulus2);
	CHECK_THROWS_AS(parse_surface("sphere-0"), InputError);
	CHECK(surface_preset("torus-1").variables.size() == 3);
	CHECK(surface_preset("annulus-2").variables.size() == 2);
	CHECK(to_string(Surface::Torus1) == "torus-1");
}

TEST_CASE("mutate_sequence")
{
	auto s0 = surface_preset(Surface::Torus1);
	auto trace = mutate_sequence(s0, "torus-1", {1, 2, 1});
	REQUIRE(trace.seeds.size() == 4);
	CHECK(trace.seeds[0] == s0);
	for (std::size_t i = 0; i < 3; ++i)
		CHECK(trace.seeds[i + 1] == mutate(trace.seeds[i], trace.directions[i]));
}

TEST_CASE("audits")
{
	auto annulus = positivity_audit(surface_preset(Surface::Annulus2), 4);
	CHECK(annulus.passed());
	CHECK(annulus.check_positivity);
	// Kronecker quiver: two new seeds per level, one new variable each
	CHECK(annulus.explored == 9);
	CHECK(annulus.distinct_variables.size() == 10);
	CHECK(std::is_sorted(annulus.distinct_variables.begin(), annulus.distinct_variables.end()));

	auto torus = laurent_audit(surface_preset(Surface::Torus1), 3);
	CHECK(torus.passed());
	CHECK_FALSE(torus.check_positivity);
	CHECK(torus.explored == 1 + 3 + 6 + 12);

	auto zero = laurent_audit(surface_preset(Surface::Torus1), 0);
	CHECK(zero.explored == 1);
	CHECK(zero.distinct_variables.size() == 3);
}
