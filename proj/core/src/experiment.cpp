#include "ordbraid/experiment.hpp"

#include "ordbraid/error.hpp"
#include "ordbraid/garside.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ordbraid {

std::size_t verdict_slot(Verdict v)
{
	switch (v) {
	case Verdict::Positive:
		return 0;
	case Verdict::Negative:
		return 1;
	case Verdict::Identity:
		return 2;
	}
	return 2;
}

ContingencyTable tabulate(const std::vector<ExperimentRecord> &records)
{
	ContingencyTable t{};
	for (const auto &r : records)
		++t[verdict_slot(r.dehornoy)][r.all_coefficients_positive ? 1 : 0];
	return t;
}

namespace {

// All words of exactly `len` letters in length-then-lexicographic order.
void enumerate(int strands, std::size_t len, std::vector<int> &prefix,
               std::vector<std::vector<int>> &out)
{
	if (prefix.size() == len) {
		out.push_back(prefix);
		return;
	}
	for (int k = -(strands - 1); k <= strands - 1; ++k) {
		if (k == 0)
			continue;
		prefix.push_back(k);
		enumerate(strands, len, prefix, out);
		prefix.pop_back();
	}
}

using ElementKey = std::pair<int, std::vector<std::vector<int>>>;

ElementKey element_key(const BraidWord &b)
{
	auto nf = garside_normal_form(b);
	ElementKey key{nf.delta_power, {}};
	for (const auto &f : nf.factors)
		key.second.push_back(f.images);
	return key;
}

} // namespace

ExperimentReport experiment_order_positivity(int strands, std::size_t max_len,
                                             const InvariantCaps &caps)
{
	if (strands != 2 && strands != 3)
		throw InputError("the order/positivity experiment runs on 2 or 3 strands");
	ExperimentReport report;
	report.strands = strands;
	report.max_len = max_len;
	report.surface = strands == 2 ? SurfaceType::Annulus : SurfaceType::PuncturedTorus;

	// group elements are bucketed by Garside normal form; the first word found
	// for an element is kept after confirming equality by handle reduction
	std::map<ElementKey, BraidWord> kept;
	for (std::size_t len = 0; len <= max_len; ++len) {
		std::vector<std::vector<int>> words;
		std::vector<int> prefix;
		enumerate(strands, len, prefix, words);
		for (auto &letters : words) {
			BraidWord b(strands, std::move(letters));
			auto key = element_key(b);
			auto it = kept.find(key);
			if (it != kept.end()) {
				if (!braid_equal(it->second, b))
					throw std::logic_error("normal form collision between unequal braids");
				continue;
			}
			kept.emplace(std::move(key), b);

			ExperimentRecord r;
			r.braid = b.text();
			r.strands = strands;
			r.dehornoy = dehornoy_sign(b).verdict;
			auto value = braid_to_laurent(b, report.surface, caps);
			r.invariant_kind = value.kind;
			r.poly = canonical_text(value.poly);
			r.all_coefficients_positive = is_positive(value.poly);
			report.records.push_back(std::move(r));
		}
	}
	std::sort(report.records.begin(), report.records.end(),
	          [](const auto &x, const auto &y) { return x.braid < y.braid; });
	report.summary = tabulate(report.records);
	return report;
}

long lo_dimension(long m)
{
	if (m < 2)
		throw InputError("LO(F_m) dimension needs m >= 2");
	long k = m / 2;
	return m % 2 == 0 ? 6 * k - 5 : 6 * k - 3;
}

} // namespace ordbraid
