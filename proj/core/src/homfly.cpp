// HOMFLY polynomial of a braid closure by a skein tree over braid words.
//
// Switching a crossing flips the sign of its letter and smoothing it deletes the
// letter, so every node of the tree is again a braid word on the same strands.
// At each node the closure is traversed component by component from fixed base
// points; the first crossing met as an underpass is switched. A word with no
// such crossing is descending, hence an unlink.

#include "ordbraid/link.hpp"

#include "ordbraid/error.hpp"

#include <cstdlib>
#include <map>
#include <optional>

namespace ordbraid {

namespace {

class SkeinTree {
public:
	explicit SkeinTree(int strands) : n_(strands), vars_(homfly_variables())
	{
		auto a = LaurentPoly::variable(vars_, "a", 1);
		auto a_inv = LaurentPoly::variable(vars_, "a", -1);
		auto z_inv = LaurentPoly::variable(vars_, "z", -1);
		unlink_step_ = (a - a_inv) * z_inv;
		a2_ = LaurentPoly::variable(vars_, "a", 2);
		a_minus2_ = LaurentPoly::variable(vars_, "a", -2);
		smooth_pos_ = LaurentPoly::monomial(vars_, {-1, 1});
		smooth_neg_ = LaurentPoly::monomial(vars_, {1, 1}, -1);
	}

	LaurentPoly evaluate(std::vector<int> w)
	{
		w = simplify(std::move(w));
		if (auto it = memo_.find(w); it != memo_.end())
			return it->second;

		LaurentPoly value(vars_);
		int components = 0;
		auto bad = first_undercrossing(w, components);
		if (!bad) {
			value = unlink_step_.pow(static_cast<unsigned>(components - 1));
		} else {
			std::size_t m = *bad;
			auto switched = w;
			switched[m] = -w[m];
			auto smoothed = w;
			smoothed.erase(smoothed.begin() + static_cast<std::ptrdiff_t>(m));
			// P+ = a^-2 P- + a^-1 z P0,  P- = a^2 P+ - a z P0
			if (w[m] > 0)
				value = a_minus2_ * evaluate(switched) + smooth_pos_ * evaluate(smoothed);
			else
				value = a2_ * evaluate(switched) + smooth_neg_ * evaluate(smoothed);
		}
		memo_.emplace(std::move(w), value);
		return value;
	}

private:
	// free and cyclic cancellation; both are isotopies of the closure
	static std::vector<int> simplify(std::vector<int> w)
	{
		std::vector<int> out;
		for (int k : w) {
			if (!out.empty() && out.back() == -k)
				out.pop_back();
			else
				out.push_back(k);
		}
		std::size_t lo = 0, hi = out.size();
		while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
			++lo;
			--hi;
		}
		return {out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi)};
	}

	// Index of the first crossing first reached from below, or nothing when the
	// diagram is descending. Also counts the components of the closure.
	std::optional<std::size_t> first_undercrossing(const std::vector<int> &w, int &components) const
	{
		std::vector<bool> visited(w.size(), false);
		std::vector<bool> started(n_, false);
		std::optional<std::size_t> bad;
		components = 0;
		for (int base = 0; base < n_; ++base) {
			if (started[base])
				continue;
			++components;
			int top = base;
			do {
				started[top] = true;
				int pos = top;
				for (std::size_t m = 0; m < w.size(); ++m) {
					int i = std::abs(w[m]);
					if (pos != i - 1 && pos != i)
						continue;
					// positive letters carry the strand from i-1 over to i
					bool over = (w[m] > 0) == (pos == i - 1);
					if (!visited[m]) {
						visited[m] = true;
						if (!over && !bad)
							bad = m;
					}
					pos = pos == i - 1 ? i : i - 1;
				}
				top = pos;
			} while (top != base);
		}
		return bad;
	}

	int n_;
	std::vector<Variable> vars_;
	LaurentPoly unlink_step_, a2_, a_minus2_, smooth_pos_, smooth_neg_;
	std::map<std::vector<int>, LaurentPoly> memo_;
};

} // namespace

InvariantValue homfly(const BraidWord &b, const InvariantCaps &caps)
{
	if (b.length() > caps.homfly_letters)
		throw CapExceeded("HOMFLY skein tree limited to " + std::to_string(caps.homfly_letters) +
		                  " letters");
	SkeinTree tree(b.strands());
	std::vector<int> w(b.letters().begin(), b.letters().end());
	return {InvariantKind::Homfly, tree.evaluate(std::move(w))};
}

} // namespace ordbraid
