#pragma once

#include "ordbraid/braid.hpp"

#include <utility>
#include <vector>

namespace ordbraid {

// Left normal form Delta^delta_power * factors[0] * ... * factors[l-1], each factor
// a positive permutation braid other than 1 and Delta, consecutive pairs left-weighted.
struct GarsideNormalForm {
	int strands = 2;
	int delta_power = 0;
	std::vector<Permutation> factors;

	friend bool operator==(const GarsideNormalForm &, const GarsideNormalForm &) = default;
};

GarsideNormalForm garside_normal_form(const BraidWord &b);

// Positive word of a permutation braid (no pair of strands crosses twice).
BraidWord simple_braid_word(int strands, const Permutation &p);

// Positive word for the half twist Delta^power, power >= 0.
BraidWord delta_word(int strands, int power);

// Positive braids (lhs, rhs) with inverse(lhs) * rhs == b in B_n.
std::pair<BraidWord, BraidWord> positive_decompose(const BraidWord &b);

} // namespace ordbraid
