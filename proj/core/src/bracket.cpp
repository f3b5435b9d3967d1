#include "ordbraid/link.hpp"

#include "ordbraid/error.hpp"

#include <map>
#include <stdexcept>

namespace ordbraid {

namespace {

LaurentPoly loop_value()
{
	auto vars = bracket_variables();
	return -LaurentPoly::variable(vars, "A", 2) - LaurentPoly::variable(vars, "A", -2);
}

// partner[a] is the open arc joined to open arc a through the contracted part, or -1.
struct Frontier {
	std::vector<int> partner;
	int loops = 0;
};

void join(Frontier &f, std::vector<int> &seen, int u, int v)
{
	if (u == v) {
		// both ends of one arc meet here
		++f.loops;
		seen[u] += 2;
		return;
	}
	bool open_u = seen[u] == 1, open_v = seen[v] == 1;
	if (!open_u && !open_v) {
		f.partner[u] = v;
		f.partner[v] = u;
	} else if (open_u && !open_v) {
		int pu = f.partner[u];
		f.partner[u] = -1;
		f.partner[v] = pu;
		f.partner[pu] = v;
	} else if (!open_u && open_v) {
		int pv = f.partner[v];
		f.partner[v] = -1;
		f.partner[u] = pv;
		f.partner[pv] = u;
	} else {
		int pu = f.partner[u], pv = f.partner[v];
		f.partner[u] = f.partner[v] = -1;
		if (pu == v) {
			++f.loops;
		} else {
			f.partner[pu] = pv;
			f.partner[pv] = pu;
		}
	}
	++seen[u];
	++seen[v];
}

} // namespace

LaurentPoly kauffman_bracket(const LinkDiagram &d, const InvariantCaps &caps)
{
	if (d.crossings.size() > caps.bracket_crossings)
		throw CapExceeded("Kauffman bracket limited to " + std::to_string(caps.bracket_crossings) +
		                  " crossings");
	auto vars = bracket_variables();
	const LaurentPoly delta = loop_value();
	const LaurentPoly a_plus = LaurentPoly::variable(vars, "A", 1);
	const LaurentPoly a_minus = LaurentPoly::variable(vars, "A", -1);

	std::map<std::vector<int>, LaurentPoly> states;
	states.emplace(std::vector<int>(d.arc_count, -1), LaurentPoly::constant(vars, 1));
	std::vector<int> seen(d.arc_count, 0);

	for (const auto &c : d.crossings) {
		const auto &p = c.pd;
		// A-smoothing joins (pd0, pd3) and (pd1, pd2); the B-smoothing joins (pd0, pd1) and (pd2, pd3)
		const std::array<std::array<std::array<int, 2>, 2>, 2> smoothings{{
		    {{{p[0], p[3]}, {p[1], p[2]}}},
		    {{{p[0], p[1]}, {p[2], p[3]}}},
		}};
		std::map<std::vector<int>, LaurentPoly> next;
		std::vector<int> seen_after;
		for (const auto &[partner, value] : states) {
			for (int s = 0; s < 2; ++s) {
				Frontier f{partner, 0};
				std::vector<int> local = seen;
				for (const auto &[u, v] : smoothings[s])
					join(f, local, u, v);
				seen_after = local;
				LaurentPoly term = value * (s == 0 ? a_plus : a_minus);
				for (int l = 0; l < f.loops; ++l)
					term *= delta;
				auto [it, inserted] = next.try_emplace(std::move(f.partner), term);
				if (!inserted)
					it->second += term;
			}
		}
		seen = std::move(seen_after);
		states = std::move(next);
	}

	if (states.size() != 1)
		throw std::logic_error("bracket contraction left open arcs");
	LaurentPoly total = states.begin()->second;
	for (int l = 0; l < d.free_loops; ++l)
		total *= delta;
	// the empty state sum is normalized so that one loop counts as 1
	return divide_exact(total, delta);
}

InvariantValue jones(const BraidWord &b, const InvariantCaps &caps)
{
	auto d = braid_closure(b);
	auto bracket = kauffman_bracket(d, caps);
	int w = writhe(d);

	// (-A)^(-3w) <D>, then A^e -> t^(-e/4) = (t^1/2)^(-e/2)
	LaurentPoly v(jones_variables());
	int sign = (w % 2 == 0) ? 1 : -1;
	for (const auto &[e, c] : bracket.terms()) {
		int exponent = e[0] - 3 * w;
		if (exponent % 2 != 0)
			throw std::logic_error("odd A-exponent in a normalized bracket");
		v.add_term({-exponent / 2}, sign * c);
	}
	return {InvariantKind::Jones, std::move(v)};
}

std::map<std::string, Substitution> homfly_to_jones()
{
	auto vars = jones_variables();
	auto q = LaurentPoly::variable(vars, "t", 1);
	auto q_inv = LaurentPoly::variable(vars, "t", -1);
	std::map<std::string, Substitution> m;
	m["a"] = {LaurentPoly::variable(vars, "t", -2), LaurentPoly::variable(vars, "t", 2)};
	m["z"] = {q - q_inv, std::nullopt};
	return m;
}

} // namespace ordbraid
