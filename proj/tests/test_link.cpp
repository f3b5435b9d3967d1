#include "ordbraid/error.hpp"
#include "ordbraid/link.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace ordbraid;
using ordbraid::testing::Gen;

namespace {

LaurentPoly jp(std::string_view s) { return parse_poly(s, jones_variables()); }
LaurentPoly hp(std::string_view s) { return parse_poly(s, homfly_variables()); }

// Stabilization: b in B_n becomes b * sigma_n^{+-1} in B_{n+1}.
BraidWord stabilize(const BraidWord &b, int sign)
{
	std::vector<int> w(b.letters().begin(), b.letters().end());
	w.push_back(sign * b.strands());
	return BraidWord(b.strands() + 1, std::move(w));
}

BraidWord conjugate(const BraidWord &b, int letter)
{
	BraidWord z(b.strands(), {letter});
	return product(product(z, b), inverse(z));
}

// a -> -a^-1 on a HOMFLY polynomial.
LaurentPoly homfly_mirror(const LaurentPoly &p)
{
	auto vars = homfly_variables();
	std::map<std::string, Substitution> m{
	    {"a", {-LaurentPoly::variable(vars, "a", -1), -LaurentPoly::variable(vars, "a", 1)}},
	    {"z", {LaurentPoly::variable(vars, "z", 1), LaurentPoly::variable(vars, "z", -1)}}};
	return substitute(p, m);
}

LaurentPoly jones_mirror(const LaurentPoly &p)
{
	auto vars = jones_variables();
	std::map<std::string, Substitution> m{
	    {"t", {LaurentPoly::variable(vars, "t", -1), LaurentPoly::variable(vars, "t", 1)}}};
	return substitute(p, m);
}

} // namespace

TEST_CASE("braid_closure components and writhe")
{
	CHECK(braid_closure(BraidWord(2)).component_count == 2);
	CHECK(braid_closure(BraidWord(2)).free_loops == 2);
	CHECK(braid_closure(BraidWord(2, {1})).component_count == 1);
	CHECK(braid_closure(BraidWord(2, {1, 1})).component_count == 2);
	CHECK(braid_closure(BraidWord(3, {1})).component_count == 2);
	CHECK(braid_closure(BraidWord(3, {1})).free_loops == 1);
	CHECK(braid_closure(BraidWord(3, {1, 2})).component_count == 1);

	CHECK(writhe(braid_closure(BraidWord(2, {1, 1, 1}))) == 3);
	CHECK(writhe(braid_closure(BraidWord(3, {1, -2, 1, -2}))) == 0);
	CHECK(writhe(braid_closure(BraidWord(3, {-1, -2}))) == -2);

	auto d = braid_closure(BraidWord(3, {1, -2, 1}));
	CHECK(d.crossings.size() == 3);
	// every arc label appears exactly twice
	std::vector<int> seen(static_cast<std::size_t>(d.arc_count), 0);
	for (const auto &c : d.crossings)
		for (int a : c.pd)
			++seen[static_cast<std::size_t>(a)];
	for (int s : seen)
		CHECK(s == 2);
}

TEST_CASE("bracket examples")
{
	auto A = [](int e) { return LaurentPoly::variable(bracket_variables(), "A", e); };
	CHECK(kauffman_bracket(braid_closure(BraidWord(2, {1}))) == -A(3));
	CHECK(kauffman_bracket(braid_closure(BraidWord(2, {-1}))) == -A(-3));
	CHECK(kauffman_bracket(braid_closure(BraidWord(3))) == (-A(2) - A(-2)).pow(2));
	CHECK_THROWS_AS(kauffman_bracket(braid_closure(BraidWord(2, {1, 1, 1})), {2, 14}), CapExceeded);
}

TEST_CASE("bracket agrees with the state-sum oracle")
{
	Gen gen(51);
	for (int t = 0; t < 150; ++t) {
		auto b = gen.braid(gen.uniform(2, 5), 12);
		auto d = braid_closure(b);
		CHECK(kauffman_bracket(d) == ordbraid::testing::bracket_state_sum(d));
	}
}

TEST_CASE("Jones values")
{
	CHECK(jones(BraidWord(2, {1})).poly == jp("1"));
	CHECK(jones(BraidWord(3, {1, 2})).poly == jp("1"));
	CHECK(jones(BraidWord(3, {1, -2, 1, -2})).poly == jp("t^-2 - t^-1 + 1 - t + t^2"));
	CHECK(jones(BraidWord(2, {1, 1, 1})).poly == jp("t + t^3 - t^4"));
	CHECK(jones(BraidWord(2, {-1, -1, -1})).poly == jp("-t^-4 + t^-3 + t^-1"));
	// two-component unlink
	CHECK(jones(BraidWord(2)).poly == jp("-t^-1/2 - t^1/2"));
	CHECK(jones(BraidWord(2)).kind == InvariantKind::Jones);

	Gen gen(52);
	for (int t = 0; t < 100; ++t) {
		auto b = gen.braid(gen.uniform(2, 4), 10);
		CHECK(jones(b).poly == ordbraid::testing::jones_state_sum(b));
	}
}

TEST_CASE("HOMFLY values")
{
	CHECK(homfly(BraidWord(2, {1})).poly == hp("1"));
	CHECK(homfly(BraidWord(2, {1, 1, 1})).poly == hp("-a^-4 + 2*a^-2 + a^-2*z^2"));
	CHECK(homfly(BraidWord(3, {1, -2, 1, -2})).poly == hp("a^-2 - 1 - z^2 + a^2"));
	CHECK(homfly(BraidWord(2)).poly == hp("-a^-1*z^-1 + a*z^-1"));
	CHECK_THROWS_AS(homfly(BraidWord(2, {1, 1, 1}), {24, 2}), CapExceeded);
}

TEST_CASE("Markov moves and braid relations")
{
	Gen gen(53);
	for (int t = 0; t < 100; ++t) {
		int n = gen.uniform(2, 4);
		auto b = gen.braid(n, 8);
		auto j = jones(b).poly;
		auto h = homfly(b).poly;
		auto c = conjugate(b, gen.letter(n));
		CHECK(jones(c).poly == j);
		CHECK(homfly(c).poly == h);
		auto s = stabilize(b, gen.coin() ? 1 : -1);
		CHECK(jones(s).poly == j);
		CHECK(homfly(s).poly == h);
	}
	for (int t = 0; t < 50; ++t) {
		auto b = gen.braid(3, 6);
		std::vector<int> w(b.letters().begin(), b.letters().end());
		auto lhs = w, rhs = w;
		for (int x : {1, 2, 1})
			lhs.push_back(x);
		for (int x : {2, 1, 2})
			rhs.push_back(x);
		CHECK(jones(BraidWord(3, lhs)).poly == jones(BraidWord(3, rhs)).poly);
		CHECK(homfly(BraidWord(3, lhs)).poly == homfly(BraidWord(3, rhs)).poly);
	}
}

TEST_CASE("mirror images")
{
	Gen gen(54);
	for (int t = 0; t < 60; ++t) {
		auto b = gen.braid(gen.uniform(2, 4), 8);
		auto m = mirror(b);
		CHECK(jones(m).poly == jones_mirror(jones(b).poly));
		CHECK(homfly(m).poly == homfly_mirror(homfly(b).poly));
	}
}

TEST_CASE("HOMFLY specializes to Jones")
{
	Gen gen(55);
	for (int t = 0; t < 100; ++t) {
		auto b = gen.braid(gen.uniform(2, 4), 9);
		CHECK(substitute(homfly(b).poly, homfly_to_jones()) == jones(b).poly);
	}
}

TEST_CASE("braid_to_laurent")
{
	CHECK(parse_surface_type("0,2") == SurfaceType::Annulus);
	CHECK(parse_surface_type("1,1") == SurfaceType::PuncturedTorus);
	CHECK_THROWS_AS(parse_surface_type("2,0"), InputError);

	auto trefoil = braid_to_laurent(BraidWord(2, {1, 1, 1}), SurfaceType::Annulus);
	CHECK(trefoil.kind == InvariantKind::Jones);
	CHECK(trefoil.poly == jp("t + t^3 - t^4"));

	auto unlink3 = braid_to_laurent(BraidWord(3), SurfaceType::PuncturedTorus);
	CHECK(unlink3.kind == InvariantKind::Homfly);
	CHECK(unlink3.poly == hp("a - a^-1").pow(2) * hp("z^-2"));

	CHECK_THROWS_AS(braid_to_laurent(BraidWord(3, {1}), SurfaceType::Annulus), MismatchError);
	CHECK_THROWS_AS(braid_to_laurent(BraidWord(2, {1}), SurfaceType::PuncturedTorus), MismatchError);
}
