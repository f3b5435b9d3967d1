#include "ordbraid/link.hpp"

#include "ordbraid/error.hpp"

#include <cstdlib>
#include <numeric>

namespace ordbraid {

LinkDiagram braid_closure(const BraidWord &b)
{
	const int n = b.strands();
	int next_arc = n;
	std::vector<int> at(n); // arc currently at each position
	std::iota(at.begin(), at.end(), 0);
	std::vector<bool> touched(n, false);

	LinkDiagram d;
	for (int k : b.letters()) {
		int i = std::abs(k);
		int in_l = at[i - 1], in_r = at[i];
		int out_l = next_arc++, out_r = next_arc++;
		touched[i - 1] = touched[i] = true;
		Crossing c;
		c.sign = k > 0 ? 1 : -1;
		// strands run downward; sigma_i carries the left strand over to the right
		if (k > 0)
			c.pd = {in_r, in_l, out_l, out_r};
		else
			c.pd = {in_l, out_l, out_r, in_r};
		d.crossings.push_back(c);
		at[i - 1] = out_l;
		at[i] = out_r;
	}

	// closure: the arc leaving the bottom at position j is the arc entering at the top of j
	std::vector<int> parent(next_arc);
	std::iota(parent.begin(), parent.end(), 0);
	auto find = [&](int x) {
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	};
	for (int j = 0; j < n; ++j)
		parent[find(at[j])] = find(j);

	std::vector<int> label(next_arc, -1);
	for (auto &c : d.crossings) {
		for (int &a : c.pd) {
			int r = find(a);
			if (label[r] < 0)
				label[r] = d.arc_count++;
			a = label[r];
		}
	}
	for (int j = 0; j < n; ++j)
		if (!touched[j])
			++d.free_loops;
	d.component_count = static_cast<int>(permutation_of(b).cycles().size());
	return d;
}

int writhe(const LinkDiagram &d)
{
	int w = 0;
	for (const auto &c : d.crossings)
		w += c.sign;
	return w;
}

std::string_view to_string(InvariantKind k)
{
	switch (k) {
	case InvariantKind::Bracket:
		return "bracket";
	case InvariantKind::Jones:
		return "jones";
	case InvariantKind::Homfly:
		return "homfly";
	}
	return "?";
}

std::vector<Variable> bracket_variables() { return {{"A", 1}}; }
std::vector<Variable> jones_variables() { return {{"t", 2}}; }
std::vector<Variable> homfly_variables() { return {{"a", 1}, {"z", 1}}; }

SurfaceType parse_surface_type(std::string_view text)
{
	if (text == "0,2")
		return SurfaceType::Annulus;
	if (text == "1,1")
		return SurfaceType::PuncturedTorus;
	throw InputError("unknown surface '" + std::string(text) + "', expected 0,2 or 1,1");
}

std::string_view to_string(SurfaceType s) { return s == SurfaceType::Annulus ? "0,2" : "1,1"; }

InvariantValue braid_to_laurent(const BraidWord &b, SurfaceType surface, const InvariantCaps &caps)
{
	int need = surface == SurfaceType::Annulus ? 2 : 3;
	if (b.strands() != need)
		throw MismatchError("surface (" + std::string(to_string(surface)) + ") needs a braid on " +
		                    std::to_string(need) + " strands, got " + std::to_string(b.strands()));
	return surface == SurfaceType::Annulus ? jones(b, caps) : homfly(b, caps);
}

} // namespace ordbraid
