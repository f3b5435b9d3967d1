#include "ordbraid/dehornoy.hpp"
#include "ordbraid/error.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace ordbraid;
using ordbraid::testing::artin_equal;
using ordbraid::testing::Gen;

namespace {

std::vector<int> letters(const BraidWord &b) { return {b.letters().begin(), b.letters().end()}; }

Verdict negate(Verdict v)
{
	if (v == Verdict::Positive)
		return Verdict::Negative;
	if (v == Verdict::Negative)
		return Verdict::Positive;
	return v;
}

Relation flip(Relation r)
{
	if (r == Relation::Less)
		return Relation::Greater;
	if (r == Relation::Greater)
		return Relation::Less;
	return r;
}

} // namespace

TEST_CASE("sigma_positive_index")
{
	CHECK(sigma_positive_index(BraidWord(2, {1})) == 1);
	CHECK_FALSE(sigma_positive_index(BraidWord(3, {-1, 2, 1})).has_value());
	// only indices up to the main one matter: sigma_3^-1 is allowed
	CHECK(sigma_positive_index(BraidWord(4, {2, 3, -3})) == 2);
	CHECK_FALSE(sigma_positive_index(BraidWord(3)).has_value());
	CHECK(sigma_negative_index(BraidWord(3, {-1, 2})) == 1);
	CHECK_FALSE(sigma_positive_index(BraidWord(3, {-1, 2})).has_value());
}

TEST_CASE("handle_reduce examples")
{
	CHECK(handle_reduce(BraidWord(2, {1, -1})).empty());
	auto r = handle_reduce(BraidWord(3, {-1, 2, 1}));
	CHECK(letters(r) == std::vector{2, 1, -2});
	// sigma_1^-1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2^-1 follows from sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2
	CHECK(artin_equal(r, BraidWord(3, {-1, 2, 1})));
	CHECK(letters(handle_reduce(BraidWord(2, {1, 1, 1}))) == std::vector{1, 1, 1});
}

TEST_CASE("handle_reduce output is sigma-definite and equivalent")
{
	Gen gen(21);
	for (int t = 0; t < 400; ++t) {
		int n = gen.uniform(2, 6);
		auto w = gen.braid(n, 20);
		auto r = handle_reduce(w);
		bool definite = r.empty() || sigma_positive_index(r) || sigma_negative_index(r);
		CHECK(definite);
		CHECK(artin_equal(r, w));
	}
}

TEST_CASE("handle_reduce step cap")
{
	// the cap guards against runaway loops; a zero cap trips on any handle
	CHECK_THROWS_AS(handle_reduce(BraidWord(3, {-1, 2, 1}), {0}), CapExceeded);
	CHECK_NOTHROW(handle_reduce(BraidWord(3, {1, 2}), {0}));
}

TEST_CASE("dehornoy_sign examples")
{
	auto id = dehornoy_sign(BraidWord(3));
	CHECK(id.verdict == Verdict::Identity);
	CHECK(id.witness.empty());

	auto s = dehornoy_sign(BraidWord(3, {-1, 2, 1}));
	CHECK(s.verdict == Verdict::Positive);
	CHECK(sigma_positive_index(s.witness) == 1);

	CHECK(dehornoy_sign(BraidWord(3, {-1, 2})).verdict == Verdict::Negative);
	CHECK(dehornoy_sign(BraidWord(3, {1, 2, -1, -2, -1, 2})).verdict == Verdict::Identity);
}

TEST_CASE("dehornoy_compare examples")
{
	CHECK(dehornoy_compare(BraidWord(3, {2}), BraidWord(3, {1})) == Relation::Less);
	auto b = BraidWord(3, {1, -2, 2, 1});
	CHECK(dehornoy_compare(b, b) == Relation::Equal);
	CHECK(dehornoy_compare(BraidWord(3, {1}), BraidWord(3, {2, 1})) == Relation::Less);
	CHECK_THROWS_AS(dehornoy_compare(BraidWord(2), BraidWord(3)), MismatchError);
}

TEST_CASE("dual_right_compare")
{
	auto b = BraidWord(3, {1, 2});
	CHECK(dual_right_compare(b, b) == Relation::Equal);
	CHECK(dual_right_compare(BraidWord(3, {2}), BraidWord(3, {1})) ==
	      dehornoy_compare(BraidWord(3, {-1}), BraidWord(3, {-2})));
	CHECK_THROWS_AS(dual_right_compare(BraidWord(2), BraidWord(3)), MismatchError);

	Gen gen(22);
	for (int t = 0; t < 1000; ++t) {
		int n = gen.uniform(3, 4);
		auto a = gen.braid(n, 8), b2 = gen.braid(n, 8), z = gen.braid(n, 8);
		CHECK(dual_right_compare(a, b2) == dual_right_compare(product(a, z), product(b2, z)));
	}
}

TEST_CASE("order properties on random braids")
{
	Gen gen(23);
	for (int t = 0; t < 300; ++t) {
		int n = gen.uniform(2, 5);
		auto a = gen.braid(n, 10), b = gen.braid(n, 10), c = gen.braid(n, 10), z = gen.braid(n, 10);
		auto ab = dehornoy_compare(a, b);
		CHECK(dehornoy_compare(b, a) == flip(ab));
		CHECK((ab == Relation::Equal) == artin_equal(a, b));
		CHECK(dehornoy_compare(product(z, a), product(z, b)) == ab);
		auto bc = dehornoy_compare(b, c);
		if (ab == Relation::Less && bc == Relation::Less)
			CHECK(dehornoy_compare(a, c) == Relation::Less);

		CHECK(dehornoy_sign(inverse(a)).verdict == negate(dehornoy_sign(a).verdict));
	}
}

TEST_CASE("positive words are Dehornoy positive and closed under product")
{
	Gen gen(24);
	for (int t = 0; t < 300; ++t) {
		int n = gen.uniform(2, 5);
		auto p = gen.positive_braid(n, 1, 12);
		CHECK(dehornoy_sign(p).verdict == Verdict::Positive);
		auto a = gen.braid(n, 8), b = gen.braid(n, 8);
		if (dehornoy_sign(a).verdict == Verdict::Positive && dehornoy_sign(b).verdict == Verdict::Positive)
			CHECK(dehornoy_sign(product(a, b)).verdict == Verdict::Positive);
	}
}

TEST_CASE("lamination_sign")
{
	CHECK(lamination_sign(BraidWord(3)).verdict == Verdict::Identity);
	CHECK(lamination_sign(BraidWord(2, {1, 1, 1})).verdict == Verdict::Positive);
	CHECK(lamination_sign(BraidWord(3, {-1, 2, 1})).verdict == Verdict::Positive);
	CHECK(lamination_sign(BraidWord(3, {-1, 2})).verdict == Verdict::Negative);
	CHECK(lamination_sign(BraidWord(3, {1, 2, 1, -2, -1, -2})).verdict == Verdict::Identity);
	CHECK(lamination_sign(BraidWord(3, {1})).witness.empty());
	CHECK_THROWS_AS(lamination_sign(BraidWord(5, {1}), {4}), CapExceeded);

	Gen gen(25);
	for (int t = 0; t < 300; ++t) {
		int n = gen.uniform(2, 6);
		auto w = gen.braid(n, 16);
		CHECK(lamination_sign(w).verdict == dehornoy_sign(w).verdict);
	}
}
