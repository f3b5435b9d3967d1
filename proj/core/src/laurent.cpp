#include "ordbraid/laurent.hpp"

#include "ordbraid/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ordbraid {

bool GradedLex::operator()(const Exponents &a, const Exponents &b) const
{
	long da = std::accumulate(a.begin(), a.end(), 0L);
	long db = std::accumulate(b.begin(), b.end(), 0L);
	if (da != db)
		return da < db;
	return a < b;
}

LaurentPoly::LaurentPoly(std::vector<Variable> vars) : vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::constant(std::vector<Variable> vars, const mpz_class &c)
{
	Exponents zero(vars.size(), 0);
	return monomial(std::move(vars), std::move(zero), c);
}

LaurentPoly LaurentPoly::monomial(std::vector<Variable> vars, Exponents e, const mpz_class &c)
{
	if (e.size() != vars.size())
		throw MismatchError("exponent vector length does not match the variable count");
	LaurentPoly p(std::move(vars));
	p.add_term(e, c);
	return p;
}

LaurentPoly LaurentPoly::variable(std::vector<Variable> vars, std::string_view name, int power)
{
	LaurentPoly p(std::move(vars));
	auto j = p.index_of(name);
	if (!j)
		throw MismatchError("unknown variable '" + std::string(name) + "'");
	Exponents e(p.vars_.size(), 0);
	e[*j] = power;
	p.add_term(e, 1);
	return p;
}

bool LaurentPoly::is_unit_monomial() const
{
	return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

std::optional<std::size_t> LaurentPoly::index_of(std::string_view name) const
{
	for (std::size_t j = 0; j < vars_.size(); ++j)
		if (vars_[j].name == name)
			return j;
	return std::nullopt;
}

int LaurentPoly::min_exponent(std::size_t j) const
{
	if (terms_.empty())
		return 0;
	int m = terms_.begin()->first[j];
	for (const auto &[e, c] : terms_)
		m = std::min(m, e[j]);
	return m;
}

int LaurentPoly::max_exponent(std::size_t j) const
{
	if (terms_.empty())
		return 0;
	int m = terms_.begin()->first[j];
	for (const auto &[e, c] : terms_)
		m = std::max(m, e[j]);
	return m;
}

void LaurentPoly::add_term(const Exponents &e, const mpz_class &c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(e, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void LaurentPoly::check_compatible(const LaurentPoly &rhs) const
{
	if (vars_ != rhs.vars_)
		throw MismatchError("Laurent polynomials over different variable sets");
}

LaurentPoly LaurentPoly::operator-() const
{
	LaurentPoly r = *this;
	for (auto &[e, c] : r.terms_)
		c = -c;
	return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs)
{
	check_compatible(rhs);
	for (const auto &[e, c] : rhs.terms_)
		add_term(e, c);
	return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs)
{
	check_compatible(rhs);
	for (const auto &[e, c] : rhs.terms_)
		add_term(e, -c);
	return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
	a.check_compatible(b);
	LaurentPoly r(a.vars_);
	Exponents e(a.vars_.size());
	for (const auto &[ea, ca] : a.terms_) {
		for (const auto &[eb, cb] : b.terms_) {
			for (std::size_t j = 0; j < e.size(); ++j)
				e[j] = ea[j] + eb[j];
			r.add_term(e, ca * cb);
		}
	}
	return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &rhs)
{
	*this = *this * rhs;
	return *this;
}

LaurentPoly LaurentPoly::pow(unsigned k) const
{
	LaurentPoly result = constant(vars_, 1);
	LaurentPoly base = *this;
	while (k) {
		if (k & 1)
			result *= base;
		k >>= 1;
		if (k)
			base *= base;
	}
	return result;
}

LaurentPoly LaurentPoly::shifted(const Exponents &shift) const
{
	LaurentPoly r(vars_);
	for (const auto &[e, c] : terms_) {
		Exponents f = e;
		for (std::size_t j = 0; j < f.size(); ++j)
			f[j] += shift[j];
		r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
	}
	return r;
}

// ---------------------------------------------------------------------------

LaurentPoly divide_exact(const LaurentPoly &p, const LaurentPoly &q)
{
	if (q.is_zero())
		throw InexactDivision("division by the zero polynomial");
	if (p.variables() != q.variables())
		throw MismatchError("Laurent polynomials over different variable sets");
	LaurentPoly quotient(p.variables());
	if (p.is_zero())
		return quotient;

	const std::size_t nv = p.variables().size();
	auto difference = [nv](const Exponents &a, const Exponents &b) {
		Exponents d(nv);
		for (std::size_t j = 0; j < nv; ++j)
			d[j] = a[j] - b[j];
		return d;
	};

	// any quotient term lies between lowest(p)/lowest(q) and highest(p)/highest(q)
	const auto &[q_hi, q_lc] = *q.terms().rbegin();
	const Exponents floor = difference(p.terms().begin()->first, q.terms().begin()->first);
	GradedLex less;

	LaurentPoly rem = p;
	while (!rem.is_zero()) {
		const auto &[r_hi, r_lc] = *rem.terms().rbegin();
		Exponents e = difference(r_hi, q_hi);
		if (less(e, floor) || !mpz_divisible_p(r_lc.get_mpz_t(), q_lc.get_mpz_t()))
			throw InexactDivision("no Laurent polynomial quotient");
		mpz_class c = r_lc / q_lc;
		quotient.add_term(e, c);
		rem -= q.shifted(e) * LaurentPoly::constant(p.variables(), c);
	}
	return quotient;
}

bool is_positive(const LaurentPoly &p)
{
	if (p.is_zero())
		return false;
	return std::all_of(p.terms().begin(), p.terms().end(),
	                   [](const auto &t) { return t.second > 0; });
}

LaurentPoly substitute(const LaurentPoly &p, const std::map<std::string, Substitution> &assignment)
{
	const auto &vars = p.variables();
	std::vector<const Substitution *> subs(vars.size());
	std::optional<std::vector<Variable>> target;
	for (std::size_t j = 0; j < vars.size(); ++j) {
		auto it = assignment.find(vars[j].name);
		if (it == assignment.end())
			throw MismatchError("no assignment for variable '" + vars[j].name + "'");
		subs[j] = &it->second;
		if (!target)
			target = it->second.value.variables();
		else if (*target != it->second.value.variables())
			throw MismatchError("assigned values live in different rings");
	}
	if (!target)
		return p; // no variables: p is a constant

	// negative powers of non-unit values without an explicit inverse are
	// handled by multiplying through and dividing at the end
	std::vector<LaurentPoly> inverse(vars.size());
	Exponents clear(vars.size(), 0);
	LaurentPoly denominator = LaurentPoly::constant(*target, 1);
	for (std::size_t j = 0; j < vars.size(); ++j) {
		int lo = p.min_exponent(j);
		if (lo >= 0)
			continue;
		const auto &s = *subs[j];
		if (s.inverse) {
			if (s.inverse->variables() != *target)
				throw MismatchError("inverse lives in a different ring");
			inverse[j] = *s.inverse;
		} else if (s.value.is_unit_monomial()) {
			const auto &[e, c] = *s.value.terms().begin();
			Exponents neg(e.size());
			for (std::size_t k = 0; k < e.size(); ++k)
				neg[k] = -e[k];
			inverse[j] = LaurentPoly::monomial(*target, neg, c);
		} else {
			clear[j] = -lo;
			denominator *= s.value.pow(static_cast<unsigned>(-lo));
		}
	}

	LaurentPoly image(*target);
	std::vector<std::map<int, LaurentPoly>> powers(vars.size());
	auto power_of = [&](std::size_t j, int k) -> const LaurentPoly & {
		auto it = powers[j].find(k);
		if (it != powers[j].end())
			return it->second;
		LaurentPoly v = k >= 0 ? subs[j]->value.pow(static_cast<unsigned>(k))
		                       : inverse[j].pow(static_cast<unsigned>(-k));
		return powers[j].emplace(k, std::move(v)).first->second;
	};
	for (const auto &[e, c] : p.terms()) {
		LaurentPoly term = LaurentPoly::constant(*target, c);
		for (std::size_t j = 0; j < vars.size(); ++j) {
			int k = e[j] + clear[j];
			if (k != 0)
				term *= power_of(j, k);
		}
		image += term;
	}
	try {
		return divide_exact(image, denominator);
	} catch (const InexactDivision &) {
		throw InexactDivision("non-invertible assignment: the image is not a Laurent polynomial");
	}
}

// ---------------------------------------------------------------------------

namespace {

std::string exponent_text(int e, int denominator)
{
	if (e % denominator == 0)
		return std::to_string(e / denominator);
	int g = std::gcd(e, denominator);
	return std::to_string(e / g) + "/" + std::to_string(denominator / g);
}

} // namespace

std::string canonical_text(const LaurentPoly &p)
{
	if (p.is_zero())
		return "0";
	const auto &vars = p.variables();
	std::string out;
	bool first = true;
	for (const auto &[e, c] : p.terms()) {
		if (first)
			out += c < 0 ? "-" : "";
		else
			out += c < 0 ? " - " : " + ";
		first = false;
		mpz_class mag = abs(c);
		bool constant_term = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
		if (constant_term) {
			out += mag.get_str();
			continue;
		}
		std::string factors;
		for (std::size_t j = 0; j < vars.size(); ++j) {
			if (e[j] == 0)
				continue;
			if (!factors.empty())
				factors += '*';
			factors += vars[j].name + "^" + exponent_text(e[j], vars[j].denominator);
		}
		if (mag != 1)
			out += mag.get_str() + "*";
		out += factors;
	}
	return out;
}

namespace {

class PolyParser {
public:
	PolyParser(std::string_view s, const std::vector<Variable> &vars) : s_(s), vars_(vars) {}

	LaurentPoly parse()
	{
		LaurentPoly result(vars_);
		skip_space();
		if (at_end())
			fail("empty polynomial");
		int sign = 1;
		if (peek() == '-' || peek() == '+') {
			sign = peek() == '-' ? -1 : 1;
			++pos_;
		}
		for (;;) {
			parse_term(sign, result);
			skip_space();
			if (at_end())
				break;
			char op = peek();
			if (op != '+' && op != '-')
				fail("expected '+' or '-'");
			sign = op == '-' ? -1 : 1;
			++pos_;
		}
		return result;
	}

private:
	bool at_end() const { return pos_ >= s_.size(); }
	char peek() const { return s_[pos_]; }

	[[noreturn]] void fail(const std::string &what) const
	{
		throw InputError("malformed polynomial '" + std::string(s_) + "' at offset " +
		                 std::to_string(pos_) + ": " + what);
	}

	void skip_space()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
			++pos_;
	}

	mpz_class parse_unsigned()
	{
		std::size_t start = pos_;
		while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
			++pos_;
		if (start == pos_)
			fail("expected digits");
		return mpz_class(std::string(s_.substr(start, pos_ - start)));
	}

	int parse_int()
	{
		int sign = 1;
		if (!at_end() && (peek() == '-' || peek() == '+')) {
			sign = peek() == '-' ? -1 : 1;
			++pos_;
		}
		mpz_class v = parse_unsigned();
		if (!v.fits_sint_p())
			fail("exponent too large");
		return sign * static_cast<int>(v.get_si());
	}

	void parse_term(int sign, LaurentPoly &out)
	{
		skip_space();
		mpz_class coeff = sign;
		Exponents e(vars_.size(), 0);
		bool need_factor = true;
		if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
			coeff *= parse_unsigned();
			need_factor = false;
			skip_space();
			if (!at_end() && peek() == '*') {
				++pos_;
				need_factor = true;
			} else {
				out.add_term(e, coeff);
				return;
			}
		}
		for (;;) {
			skip_space();
			parse_factor(e);
			need_factor = false;
			skip_space();
			if (!at_end() && peek() == '*')
				++pos_;
			else
				break;
		}
		if (need_factor)
			fail("dangling '*'");
		out.add_term(e, coeff);
	}

	void parse_factor(Exponents &e)
	{
		std::size_t start = pos_;
		while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
			if (pos_ == start && std::isdigit(static_cast<unsigned char>(peek())))
				break;
			++pos_;
		}
		if (start == pos_)
			fail("expected a variable name");
		std::string_view name = s_.substr(start, pos_ - start);
		std::size_t j = 0;
		while (j < vars_.size() && vars_[j].name != name)
			++j;
		if (j == vars_.size())
			fail("unknown variable '" + std::string(name) + "'");
		int num = 1, den = 1;
		if (!at_end() && peek() == '^') {
			++pos_;
			num = parse_int();
			if (!at_end() && peek() == '/') {
				++pos_;
				den = parse_int();
				if (den <= 0)
					fail("bad exponent denominator");
			}
		}
		long scaled = static_cast<long>(num) * vars_[j].denominator;
		if (scaled % den != 0)
			fail("exponent not representable for variable '" + vars_[j].name + "'");
		e[j] += static_cast<int>(scaled / den);
	}

	std::string_view s_;
	const std::vector<Variable> &vars_;
	std::size_t pos_ = 0;
};

} // namespace

LaurentPoly parse_poly(std::string_view s, const std::vector<Variable> &vars)
{
	return PolyParser(s, vars).parse();
}

} // namespace ordbraid
