#pragma once

#include "ordbraid/braid.hpp"
#include "ordbraid/laurent.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace ordbraid {

// One crossing in PD notation: pd[0] is the incoming under arc and the four
// arcs are listed counterclockwise.
struct Crossing {
	std::array<int, 4> pd{};
	int sign = 1;

	std::array<int, 2> under() const { return {pd[0], pd[2]}; }
	std::array<int, 2> over() const { return sign > 0 ? std::array{pd[1], pd[3]} : std::array{pd[3], pd[1]}; }
};

// Planar diagram of a braid closure. Components without crossings carry no
// arcs and are counted in free_loops.
struct LinkDiagram {
	std::vector<Crossing> crossings;
	int arc_count = 0;
	int free_loops = 0;
	int component_count = 0;
};

LinkDiagram braid_closure(const BraidWord &b);

int writhe(const LinkDiagram &d);

enum class InvariantKind { Bracket, Jones, Homfly };
std::string_view to_string(InvariantKind k);

struct InvariantValue {
	InvariantKind kind;
	LaurentPoly poly;
};

std::vector<Variable> bracket_variables(); // A
std::vector<Variable> jones_variables();   // t with half-integer powers
std::vector<Variable> homfly_variables();  // a, z

struct InvariantCaps {
	std::size_t bracket_crossings = 24;
	std::size_t homfly_letters = 14;
};

// <unknot> = 1, <X> = A <0-smoothing> + A^-1 <infinity-smoothing>, loop value -A^2 - A^-2.
// Contracts crossings in diagram order, merging states with equal boundary connectivity.
LaurentPoly kauffman_bracket(const LinkDiagram &d, const InvariantCaps &caps = {});

// V = (-A)^(-3w) <D> at t = A^-4.
InvariantValue jones(const BraidWord &b, const InvariantCaps &caps = {});

// a P(L+) - a^-1 P(L-) = z P(L0), P(unknot) = 1, by a skein tree over braid words.
InvariantValue homfly(const BraidWord &b, const InvariantCaps &caps = {});

// a -> t^-1, z -> t^1/2 - t^-1/2, as an assignment for substitute().
std::map<std::string, Substitution> homfly_to_jones();

// Surfaces S_{0,2} and S_{1,1}: braids in B_2 go to Jones, braids in B_3 to HOMFLY.
enum class SurfaceType { Annulus, PuncturedTorus };
SurfaceType parse_surface_type(std::string_view text); // "0,2" or "1,1"
std::string_view to_string(SurfaceType s);
InvariantValue braid_to_laurent(const BraidWord &b, SurfaceType surface, const InvariantCaps &caps = {});

} // namespace ordbraid
