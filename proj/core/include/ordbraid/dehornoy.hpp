#pragma once

#include "ordbraid/braid.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace ordbraid {

enum class Verdict { Positive, Negative, Identity };
enum class Relation { Less, Greater, Equal };

std::string_view to_string(Verdict v);
std::string_view to_string(Relation r);

struct DehornoySign {
	Verdict verdict = Verdict::Identity;
	BraidWord witness; // sigma-positive, sigma-negative or empty representative
};

struct HandleReductionOptions {
	std::uint64_t max_steps = 1'000'000;
};

// Index i such that the word contains sigma_i, no sigma_i^-1 and no sigma_j with j < i.
std::optional<int> sigma_positive_index(const BraidWord &w);
std::optional<int> sigma_negative_index(const BraidWord &w);

// Handle reduction. The result is equivalent to w and is empty, sigma-positive
// or sigma-negative. Throws CapExceeded past options.max_steps reductions.
BraidWord handle_reduce(const BraidWord &w, const HandleReductionOptions &options = {});

DehornoySign dehornoy_sign(const BraidWord &b, const HandleReductionOptions &options = {});

// a < b iff a^-1 b is sigma-positive. Left-invariant.
Relation dehornoy_compare(const BraidWord &a, const BraidWord &b);

// The right-invariant dual: a <* b iff b^-1 < a^-1.
Relation dual_right_compare(const BraidWord &a, const BraidWord &b);

// True iff a and b are the same element of B_n.
bool braid_equal(const BraidWord &a, const BraidWord &b);

struct LaminationOptions {
	int max_strands = 16;
};

// Sign read off the action of b on integral lamination (Dynnikov) coordinates.
// Shares no code with handle reduction. The witness is left empty.
DehornoySign lamination_sign(const BraidWord &b, const LaminationOptions &options = {});

} // namespace ordbraid
