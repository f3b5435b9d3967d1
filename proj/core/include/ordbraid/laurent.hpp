#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordbraid {

// A ring variable. Stored exponents are multiples of 1/denominator, so a
// variable with denominator 2 carries half-integer powers of `name`.
struct Variable {
	std::string name;
	int denominator = 1;

	friend bool operator==(const Variable &, const Variable &) = default;
};

using Exponents = std::vector<int>;

// Graded lexicographic order on exponent vectors: total degree, then lex.
struct GradedLex {
	bool operator()(const Exponents &a, const Exponents &b) const;
};

// Sparse Laurent polynomial with arbitrary precision integer coefficients.
class LaurentPoly {
public:
	using Terms = std::map<Exponents, mpz_class, GradedLex>;

	LaurentPoly() = default;
	explicit LaurentPoly(std::vector<Variable> vars);

	static LaurentPoly constant(std::vector<Variable> vars, const mpz_class &c);
	static LaurentPoly monomial(std::vector<Variable> vars, Exponents e, const mpz_class &c = 1);
	// name^power, power counted in stored units
	static LaurentPoly variable(std::vector<Variable> vars, std::string_view name, int power = 1);

	const std::vector<Variable> &variables() const { return vars_; }
	const Terms &terms() const { return terms_; }
	std::size_t term_count() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	// single term with coefficient +-1
	bool is_unit_monomial() const;
	std::optional<std::size_t> index_of(std::string_view name) const;

	// lowest and highest stored exponent of variable slot j; zero polynomial -> 0
	int min_exponent(std::size_t j) const;
	int max_exponent(std::size_t j) const;

	LaurentPoly operator-() const;
	LaurentPoly &operator+=(const LaurentPoly &rhs);
	LaurentPoly &operator-=(const LaurentPoly &rhs);
	LaurentPoly &operator*=(const LaurentPoly &rhs);
	friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
	friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
	friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);

	LaurentPoly pow(unsigned k) const;
	// exponents shifted by e, i.e. multiplication by the monomial x^e
	LaurentPoly shifted(const Exponents &e) const;

	// Internal: adds c * x^e without variable checks.
	void add_term(const Exponents &e, const mpz_class &c);

	friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
	void check_compatible(const LaurentPoly &rhs) const;

	std::vector<Variable> vars_;
	Terms terms_;
};

LaurentPoly divide_exact(const LaurentPoly &p, const LaurentPoly &q);

// All coefficients strictly positive; the zero polynomial is not positive.
bool is_positive(const LaurentPoly &p);

struct Substitution {
	LaurentPoly value;
	std::optional<LaurentPoly> inverse; // used for negative powers when given
};

// Image of p under x_j -> assignment[name_j]. Negative powers use the explicit
// inverse, the inverse of a unit monomial, or else an exact division after
// clearing denominators (InexactDivision when the image is not Laurent).
LaurentPoly substitute(const LaurentPoly &p, const std::map<std::string, Substitution> &assignment);

std::string canonical_text(const LaurentPoly &p);
LaurentPoly parse_poly(std::string_view s, const std::vector<Variable> &vars);

} // namespace ordbraid
