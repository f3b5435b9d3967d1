#include "ordbraid/cluster.hpp"

#include "ordbraid/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace ordbraid {

bool is_skew_symmetric(const std::vector<std::vector<int>> &b)
{
	for (const auto &row : b)
		if (row.size() != b.size())
			return false;
	for (std::size_t i = 0; i < b.size(); ++i)
		for (std::size_t j = 0; j <= i; ++j)
			if (b[i][j] != -b[j][i])
				return false;
	return true;
}

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<int>> entries) : b_(std::move(entries))
{
	if (!is_skew_symmetric(b_))
		throw InputError("exchange matrix must be square and skew-symmetric");
}

ExchangeMatrix ExchangeMatrix::mutated(std::size_t k) const
{
	if (k >= size())
		throw InputError("mutation direction out of range");
	auto m = b_;
	for (std::size_t i = 0; i < size(); ++i) {
		for (std::size_t j = 0; j < size(); ++j) {
			if (i == k || j == k)
				m[i][j] = -b_[i][j];
			else
				m[i][j] = b_[i][j] + (std::abs(b_[i][k]) * b_[k][j] + b_[i][k] * std::abs(b_[k][j])) / 2;
		}
	}
	ExchangeMatrix r;
	r.b_ = std::move(m);
	return r;
}

std::vector<Variable> initial_variables(std::size_t m)
{
	std::vector<Variable> vars;
	for (std::size_t i = 1; i <= m; ++i)
		vars.push_back({"x" + std::to_string(i), 1});
	return vars;
}

Seed Seed::initial(ExchangeMatrix matrix)
{
	Seed s;
	auto vars = initial_variables(matrix.size());
	for (const auto &v : vars)
		s.variables.push_back(LaurentPoly::variable(vars, v.name));
	s.matrix = std::move(matrix);
	return s;
}

Seed mutate(const Seed &s, std::size_t k)
{
	const std::size_t m = s.variables.size();
	if (k < 1 || k > m)
		throw InputError("mutation direction " + std::to_string(k) + " outside 1.." +
		                 std::to_string(m));
	const std::size_t c = k - 1;
	const auto &vars = s.variables[c].variables();
	LaurentPoly plus = LaurentPoly::constant(vars, 1);
	LaurentPoly minus = plus;
	for (std::size_t i = 0; i < m; ++i) {
		int b = s.matrix(i, c);
		if (b > 0)
			plus *= s.variables[i].pow(static_cast<unsigned>(b));
		else if (b < 0)
			minus *= s.variables[i].pow(static_cast<unsigned>(-b));
	}
	Seed r = s;
	r.variables[c] = divide_exact(plus + minus, s.variables[c]);
	r.matrix = s.matrix.mutated(c);
	return r;
}

ExchangeMatrix matrix_from_triangulation(const Triangulation &t)
{
	if (t.arc_count < 1)
		throw InputError("triangulation needs at least one arc");
	std::vector<std::vector<int>> b(t.arc_count, std::vector<int>(t.arc_count, 0));
	for (const auto &tri : t.triangles) {
		for (int a : tri)
			if (a != Triangulation::kBoundary && (a < 0 || a >= t.arc_count))
				throw InputError("arc index " + std::to_string(a) + " out of range");
		for (int p = 0; p < 3; ++p)
			for (int q = p + 1; q < 3; ++q)
				if (tri[p] != Triangulation::kBoundary && tri[p] == tri[q])
					throw InputError("triangle repeats arc " + std::to_string(tri[p]));
		for (int p = 0; p < 3; ++p) {
			int i = tri[p], j = tri[(p + 1) % 3];
			if (i == Triangulation::kBoundary || j == Triangulation::kBoundary)
				continue;
			// j follows i counterclockwise
			b[i][j] += 1;
			b[j][i] -= 1;
		}
	}
	return ExchangeMatrix(std::move(b));
}

Surface parse_surface(std::string_view name)
{
	if (name == "torus-1")
		return Surface::Torus1;
	if (name == "annulus-2")
		return Surface::Annulus2;
	throw InputError("unknown surface preset '" + std::string(name) + "'");
}

std::string_view to_string(Surface s)
{
	return s == Surface::Torus1 ? "torus-1" : "annulus-2";
}

Triangulation preset_triangulation(Surface s)
{
	constexpr int B = Triangulation::kBoundary;
	switch (s) {
	case Surface::Torus1:
		// once-punctured torus: three arcs, two triangles
		return {3, {{0, 1, 2}, {0, 1, 2}}};
	case Surface::Annulus2:
		// one marked point on each boundary circle: two arcs, two triangles
		return {2, {{0, 1, B}, {0, 1, B}}};
	}
	throw InputError("unknown surface preset");
}

Seed surface_preset(Surface s) { return Seed::initial(matrix_from_triangulation(preset_triangulation(s))); }

Seed surface_preset(std::string_view name) { return surface_preset(parse_surface(name)); }

MutationTrace mutate_sequence(const Seed &start, std::string source,
                              const std::vector<std::size_t> &directions)
{
	MutationTrace trace{std::move(source), directions, {start}};
	for (std::size_t k : directions)
		trace.seeds.push_back(mutate(trace.seeds.back(), k));
	return trace;
}

namespace {

using SeedKey = std::pair<std::vector<std::string>, ExchangeMatrix>;

SeedKey key_of(const Seed &s)
{
	SeedKey key;
	for (const auto &v : s.variables)
		key.first.push_back(canonical_text(v));
	key.second = s.matrix;
	return key;
}

AuditReport audit(const Seed &s0, std::size_t depth, bool positivity)
{
	AuditReport report;
	report.depth = depth;
	report.check_positivity = positivity;

	struct Node {
		Seed seed;
		std::vector<std::size_t> path;
	};
	std::set<SeedKey> seen;
	std::set<std::string> variables;
	std::deque<Node> queue;

	auto visit = [&](const Seed &s, const std::vector<std::size_t> &path) {
		if (!seen.insert(key_of(s)).second)
			return false;
		++report.explored;
		for (const auto &v : s.variables) {
			auto text = canonical_text(v);
			if (variables.insert(text).second && positivity && !is_positive(v))
				report.failures.push_back({path, "cluster variable " + text + " is not positive"});
		}
		return true;
	};

	visit(s0, {});
	queue.push_back({s0, {}});
	while (!queue.empty()) {
		Node node = std::move(queue.front());
		queue.pop_front();
		if (node.path.size() == depth)
			continue;
		for (std::size_t k = 1; k <= node.seed.variables.size(); ++k) {
			if (!node.path.empty() && node.path.back() == k)
				continue;
			auto path = node.path;
			path.push_back(k);
			try {
				Seed next = mutate(node.seed, k);
				if (visit(next, path))
					queue.push_back({std::move(next), std::move(path)});
			} catch (const InexactDivision &e) {
				report.failures.push_back({path, std::string("exchange relation: ") + e.what()});
			}
		}
	}
	report.distinct_variables.assign(variables.begin(), variables.end());
	return report;
}

} // namespace

AuditReport laurent_audit(const Seed &s0, std::size_t depth) { return audit(s0, depth, false); }

AuditReport positivity_audit(const Seed &s0, std::size_t depth) { return audit(s0, depth, true); }

} // namespace ordbraid
