#include "ordbraid/dehornoy.hpp"

#include "ordbraid/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace ordbraid {

std::string_view to_string(Verdict v)
{
	switch (v) {
	case Verdict::Positive:
		return "Positive";
	case Verdict::Negative:
		return "Negative";
	case Verdict::Identity:
		return "Identity";
	}
	return "?";
}

std::string_view to_string(Relation r)
{
	switch (r) {
	case Relation::Less:
		return "Less";
	case Relation::Greater:
		return "Greater";
	case Relation::Equal:
		return "Equal";
	}
	return "?";
}

namespace {

int min_index(std::span<const int> w)
{
	int m = std::numeric_limits<int>::max();
	for (int k : w)
		m = std::min(m, std::abs(k));
	return m;
}

std::optional<int> signed_index(const BraidWord &w, int sign)
{
	if (w.empty())
		return std::nullopt;
	int i = min_index(w.letters());
	for (int k : w.letters())
		if (std::abs(k) == i && (k > 0) != (sign > 0))
			return std::nullopt;
	return i;
}

struct Handle {
	std::size_t begin, end; // positions of the two sigma_i letters
	int index;
};

// First pair of consecutive index-i letters of opposite sign inside (lo, hi).
std::optional<Handle> find_handle(const std::vector<int> &w, std::size_t lo, std::size_t hi, int i)
{
	std::optional<std::size_t> last;
	for (std::size_t p = lo; p < hi; ++p) {
		if (std::abs(w[p]) != i)
			continue;
		if (last && w[*last] == -w[p])
			return Handle{*last, p, i};
		last = p;
	}
	return std::nullopt;
}

} // namespace

std::optional<int> sigma_positive_index(const BraidWord &w) { return signed_index(w, +1); }
std::optional<int> sigma_negative_index(const BraidWord &w) { return signed_index(w, -1); }

BraidWord handle_reduce(const BraidWord &input, const HandleReductionOptions &options)
{
	std::vector<int> w(input.letters().begin(), input.letters().end());
	for (std::uint64_t steps = 0;; ++steps) {
		if (w.empty())
			break;
		auto outer = find_handle(w, 0, w.size(), min_index(w));
		if (!outer)
			break;
		if (steps >= options.max_steps)
			throw CapExceeded("handle reduction exceeded " + std::to_string(options.max_steps) +
			                  " steps");

		// descend to a permitted handle: one with no sigma_{i+1}-handle inside
		Handle h = *outer;
		while (auto inner = find_handle(w, h.begin + 1, h.end, h.index + 1))
			h = *inner;

		int i = h.index;
		int e = w[h.begin] > 0 ? 1 : -1;
		std::vector<int> replaced;
		replaced.reserve(w.size() + 2 * (h.end - h.begin));
		replaced.insert(replaced.end(), w.begin(), w.begin() + h.begin);
		for (std::size_t p = h.begin + 1; p < h.end; ++p) {
			int k = w[p];
			if (std::abs(k) == i + 1) {
				int d = k > 0 ? 1 : -1;
				for (int letter : {-e * (i + 1), d * i, e * (i + 1)}) {
					if (!replaced.empty() && replaced.back() == -letter)
						replaced.pop_back();
					else
						replaced.push_back(letter);
				}
			} else if (!replaced.empty() && replaced.back() == -k) {
				replaced.pop_back();
			} else {
				replaced.push_back(k);
			}
		}
		for (std::size_t p = h.end + 1; p < w.size(); ++p) {
			if (!replaced.empty() && replaced.back() == -w[p])
				replaced.pop_back();
			else
				replaced.push_back(w[p]);
		}
		w = std::move(replaced);
	}
	return BraidWord(input.strands(), std::move(w));
}

DehornoySign dehornoy_sign(const BraidWord &b, const HandleReductionOptions &options)
{
	auto reduced = handle_reduce(b, options);
	DehornoySign s{Verdict::Identity, reduced};
	if (reduced.empty())
		return s;
	s.verdict = sigma_positive_index(reduced) ? Verdict::Positive : Verdict::Negative;
	return s;
}

namespace {

Relation relation_from(Verdict v)
{
	switch (v) {
	case Verdict::Positive:
		return Relation::Less;
	case Verdict::Negative:
		return Relation::Greater;
	default:
		return Relation::Equal;
	}
}

} // namespace

Relation dehornoy_compare(const BraidWord &a, const BraidWord &b)
{
	return relation_from(dehornoy_sign(product(inverse(a), b)).verdict);
}

Relation dual_right_compare(const BraidWord &a, const BraidWord &b)
{
	return dehornoy_compare(inverse(b), inverse(a));
}

bool braid_equal(const BraidWord &a, const BraidWord &b)
{
	return dehornoy_sign(product(inverse(a), b)).verdict == Verdict::Identity;
}

} // namespace ordbraid
