#pragma once

#include "ordbraid/dehornoy.hpp"
#include "ordbraid/link.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace ordbraid {

struct ExperimentRecord {
	std::string braid; // braid word text
	int strands = 2;
	Verdict dehornoy = Verdict::Identity;
	InvariantKind invariant_kind = InvariantKind::Jones;
	std::string poly; // canonical text
	bool all_coefficients_positive = false;
};

// Counts indexed by [verdict][positive]: verdict order Positive, Negative, Identity.
using ContingencyTable = std::array<std::array<std::size_t, 2>, 3>;

struct ExperimentReport {
	int strands = 2;
	std::size_t max_len = 0;
	SurfaceType surface = SurfaceType::Annulus;
	std::vector<ExperimentRecord> records; // sorted by braid text
	ContingencyTable summary{};
};

std::size_t verdict_slot(Verdict v);

// Enumerates braid words up to max_len, keeps one word per group element, and
// records the Dehornoy sign next to the coefficient signs of the closure
// invariant of the matching surface (2 strands: Jones, 3 strands: HOMFLY).
ExperimentReport experiment_order_positivity(int strands, std::size_t max_len,
                                             const InvariantCaps &caps = {});

ContingencyTable tabulate(const std::vector<ExperimentRecord> &records);

// Ambient dimension of LO(F_m): 6k-5 for m = 2k, 6k-3 for m = 2k+1.
long lo_dimension(long m);

} // namespace ordbraid
