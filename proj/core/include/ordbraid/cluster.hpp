#pragma once

#include "ordbraid/laurent.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ordbraid {

// Skew-symmetric integer matrix B = (b_ij).
class ExchangeMatrix {
public:
	ExchangeMatrix() = default;
	explicit ExchangeMatrix(std::vector<std::vector<int>> entries);

	std::size_t size() const { return b_.size(); }
	int operator()(std::size_t i, std::size_t j) const { return b_[i][j]; }
	const std::vector<std::vector<int>> &entries() const { return b_; }

	// Mutation in direction k (0-based).
	ExchangeMatrix mutated(std::size_t k) const;

	friend bool operator==(const ExchangeMatrix &, const ExchangeMatrix &) = default;
	friend auto operator<=>(const ExchangeMatrix &, const ExchangeMatrix &) = default;

private:
	std::vector<std::vector<int>> b_;
};

bool is_skew_symmetric(const std::vector<std::vector<int>> &b);

struct Seed {
	std::vector<LaurentPoly> variables; // Laurent polynomials in x1..xm
	ExchangeMatrix matrix;

	// x1..xm with the given matrix
	static Seed initial(ExchangeMatrix matrix);

	friend bool operator==(const Seed &, const Seed &) = default;
};

std::vector<Variable> initial_variables(std::size_t m);

// Mutation in direction k, 1-based. Throws InexactDivision if the exchange
// relation has no Laurent solution.
Seed mutate(const Seed &s, std::size_t k);

// Arc slots of a triangle in counterclockwise order. kBoundary marks a
// boundary segment, which carries no cluster variable.
struct Triangulation {
	static constexpr int kBoundary = -1;
	int arc_count = 0;
	std::vector<std::array<int, 3>> triangles;
};

ExchangeMatrix matrix_from_triangulation(const Triangulation &t);

enum class Surface { Torus1, Annulus2 };

Surface parse_surface(std::string_view name);
std::string_view to_string(Surface s);
Triangulation preset_triangulation(Surface s);
Seed surface_preset(std::string_view name);
Seed surface_preset(Surface s);

struct MutationTrace {
	std::string source;
	std::vector<std::size_t> directions; // 1-based
	std::vector<Seed> seeds;             // seeds[0] is the start, seeds[i+1] = mutate(seeds[i], directions[i])
};

MutationTrace mutate_sequence(const Seed &start, std::string source,
                              const std::vector<std::size_t> &directions);

struct AuditFailure {
	std::vector<std::size_t> path; // 1-based directions from the initial seed
	std::string reason;
};

struct AuditReport {
	std::size_t depth = 0;
	bool check_positivity = false;
	std::size_t explored = 0;                    // distinct seeds visited
	std::vector<std::string> distinct_variables; // canonical text, sorted
	std::vector<AuditFailure> failures;

	bool passed() const { return failures.empty(); }
};

// Breadth-first over all mutation sequences of length <= depth that never
// repeat a direction twice in a row; seeds are deduplicated by their
// variables and matrix.
AuditReport laurent_audit(const Seed &s0, std::size_t depth);
AuditReport positivity_audit(const Seed &s0, std::size_t depth);

} // namespace ordbraid
