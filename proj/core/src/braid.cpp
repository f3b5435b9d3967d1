#include "ordbraid/braid.hpp"

#include "ordbraid/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ordbraid {

namespace {

void check_letter(int k, int strands)
{
	if (k == 0 || std::abs(k) > strands - 1)
		throw InputError("braid letter " + std::to_string(k) + " out of range for " +
		                 std::to_string(strands) + " strands");
}

// In-place free reduction with a stack; works for braid and free-group letters alike.
std::vector<int> reduce_letters(std::span<const int> in)
{
	std::vector<int> out;
	out.reserve(in.size());
	for (int k : in) {
		if (!out.empty() && out.back() == -k)
			out.pop_back();
		else
			out.push_back(k);
	}
	return out;
}

} // namespace

BraidWord::BraidWord(int strands) : strands_(strands)
{
	if (strands < 2)
		throw InputError("a braid needs at least 2 strands");
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters))
{
	if (strands < 2)
		throw InputError("a braid needs at least 2 strands");
	for (int k : letters_)
		check_letter(k, strands_);
}

bool BraidWord::all_positive() const
{
	return std::all_of(letters_.begin(), letters_.end(), [](int k) { return k > 0; });
}

std::string BraidWord::text() const
{
	std::string s;
	for (std::size_t i = 0; i < letters_.size(); ++i) {
		if (i)
			s += ' ';
		s += std::to_string(letters_[i]);
	}
	return s;
}

BraidWord parse_braid(std::string_view text, int strands)
{
	if (strands < 2)
		throw InputError("strand count must be at least 2");
	std::vector<int> letters;
	std::size_t pos = 0;
	while (pos < text.size()) {
		while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
			++pos;
		if (pos == text.size())
			break;
		std::size_t end = pos;
		while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
			++end;
		auto token = text.substr(pos, end - pos);
		int value = 0;
		const char *first = token.data();
		if (!token.empty() && token.front() == '+')
			++first;
		auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
		if (ec != std::errc() || ptr != token.data() + token.size())
			throw InputError("not an integer: '" + std::string(token) + "'");
		check_letter(value, strands);
		letters.push_back(value);
		pos = end;
	}
	return BraidWord(strands, std::move(letters));
}

BraidWord free_reduce(const BraidWord &b)
{
	return BraidWord(b.strands(), reduce_letters(b.letters()));
}

BraidWord product(const BraidWord &a, const BraidWord &b)
{
	if (a.strands() != b.strands())
		throw MismatchError("product of braids on " + std::to_string(a.strands()) + " and " +
		                    std::to_string(b.strands()) + " strands");
	std::vector<int> letters(a.letters().begin(), a.letters().end());
	letters.insert(letters.end(), b.letters().begin(), b.letters().end());
	return BraidWord(a.strands(), reduce_letters(letters));
}

BraidWord inverse(const BraidWord &a)
{
	std::vector<int> letters;
	letters.reserve(a.length());
	for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
		letters.push_back(-*it);
	return BraidWord(a.strands(), reduce_letters(letters));
}

BraidWord mirror(const BraidWord &a)
{
	std::vector<int> letters;
	letters.reserve(a.length());
	for (int k : a.letters())
		letters.push_back(-k);
	return BraidWord(a.strands(), std::move(letters));
}

// ---------------------------------------------------------------------------

Permutation Permutation::identity(int n)
{
	Permutation p;
	p.images.resize(n);
	std::iota(p.images.begin(), p.images.end(), 0);
	return p;
}

Permutation Permutation::then(const Permutation &next) const
{
	Permutation r;
	r.images.resize(images.size());
	for (std::size_t j = 0; j < images.size(); ++j)
		r.images[j] = next.images[images[j]];
	return r;
}

Permutation Permutation::inverse() const
{
	Permutation r;
	r.images.resize(images.size());
	for (std::size_t j = 0; j < images.size(); ++j)
		r.images[images[j]] = static_cast<int>(j);
	return r;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
	std::vector<std::vector<int>> out;
	std::vector<bool> seen(images.size(), false);
	for (std::size_t s = 0; s < images.size(); ++s) {
		if (seen[s])
			continue;
		std::vector<int> cycle;
		for (int j = static_cast<int>(s); !seen[j]; j = images[j]) {
			seen[j] = true;
			cycle.push_back(j);
		}
		out.push_back(std::move(cycle));
	}
	return out;
}

Permutation permutation_of(const BraidWord &b)
{
	// track which strand sits at each position, then invert
	std::vector<int> at(b.strands());
	std::iota(at.begin(), at.end(), 0);
	for (int k : b.letters()) {
		int i = std::abs(k);
		std::swap(at[i - 1], at[i]);
	}
	Permutation p;
	p.images.resize(b.strands());
	for (int pos = 0; pos < b.strands(); ++pos)
		p.images[at[pos]] = pos;
	return p;
}

// ---------------------------------------------------------------------------

FreeWord::FreeWord(int rank) : rank_(rank)
{
	if (rank < 1)
		throw InputError("free group rank must be at least 1");
}

FreeWord::FreeWord(int rank, std::vector<int> letters) : FreeWord(rank)
{
	for (int k : letters)
		if (k == 0 || std::abs(k) > rank)
			throw InputError("free generator " + std::to_string(k) + " out of range");
	letters_ = reduce_letters(letters);
}

FreeWord FreeWord::generator(int rank, int index) { return FreeWord(rank, {index}); }

FreeWord FreeWord::inverse() const
{
	FreeWord r(rank_);
	r.letters_.reserve(letters_.size());
	for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
		r.letters_.push_back(-*it);
	return r;
}

FreeWord FreeWord::operator*(const FreeWord &rhs) const
{
	if (rank_ != rhs.rank_)
		throw MismatchError("free words of different rank");
	std::vector<int> letters = letters_;
	letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
	FreeWord r(rank_);
	r.letters_ = reduce_letters(letters);
	return r;
}

std::vector<long> FreeWord::abelianization() const
{
	std::vector<long> v(rank_, 0);
	for (int k : letters_)
		v[std::abs(k) - 1] += k > 0 ? 1 : -1;
	return v;
}

std::string FreeWord::text() const
{
	if (letters_.empty())
		return "1";
	std::string s;
	for (std::size_t i = 0; i < letters_.size(); ++i) {
		if (i)
			s += ' ';
		s += "x" + std::to_string(std::abs(letters_[i]));
		if (letters_[i] < 0)
			s += "^-1";
	}
	return s;
}

// ---------------------------------------------------------------------------

namespace {

// Image of a single free letter under sigma_i^e.
void apply_generator(int i, int e, int letter, std::vector<int> &out)
{
	int g = std::abs(letter);
	int s = letter > 0 ? 1 : -1;
	std::vector<int> image;
	if (g == i) {
		if (e > 0)
			image = {i, i + 1, -i};
		else
			image = {i + 1};
	} else if (g == i + 1) {
		if (e > 0)
			image = {i};
		else
			image = {-(i + 1), i, i + 1};
	} else {
		image = {g};
	}
	if (s > 0) {
		out.insert(out.end(), image.begin(), image.end());
	} else {
		for (auto it = image.rbegin(); it != image.rend(); ++it)
			out.push_back(-*it);
	}
}

} // namespace

FreeWord artin_action(const BraidWord &b, const FreeWord &w)
{
	if (w.rank() != b.strands())
		throw MismatchError("Artin action needs a free word of rank " +
		                    std::to_string(b.strands()));
	// r(s_1 ... s_k) = r(s_1) o ... o r(s_k): innermost generator first
	std::vector<int> cur(w.letters().begin(), w.letters().end());
	for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
		int i = std::abs(*it);
		int e = *it > 0 ? 1 : -1;
		std::vector<int> next;
		next.reserve(cur.size() * 3);
		for (int letter : cur)
			apply_generator(i, e, letter, next);
		cur = reduce_letters(next);
	}
	return FreeWord(w.rank(), std::move(cur));
}

FreeWord cyclic_normal_form(const FreeWord &w)
{
	std::vector<int> v(w.letters().begin(), w.letters().end());
	std::size_t lo = 0, hi = v.size();
	while (hi - lo >= 2 && v[lo] == -v[hi - 1]) {
		++lo;
		--hi;
	}
	std::vector<int> core(v.begin() + lo, v.begin() + hi);
	auto least_rotation = [](std::vector<int> c) {
		std::vector<int> best = c;
		for (std::size_t r = 1; r < c.size(); ++r) {
			std::rotate(c.begin(), c.begin() + 1, c.end());
			best = std::min(best, c);
		}
		return best;
	};
	std::vector<int> inv;
	for (auto it = core.rbegin(); it != core.rend(); ++it)
		inv.push_back(-*it);
	return FreeWord(w.rank(), std::min(least_rotation(core), least_rotation(inv)));
}

GroupPresentation link_group_presentation(const BraidWord &b)
{
	GroupPresentation p;
	p.generator_count = b.strands();
	for (int i = 1; i <= b.strands(); ++i) {
		auto x = FreeWord::generator(b.strands(), i);
		auto rel = x.inverse() * artin_action(b, x);
		if (!rel.empty())
			p.relations.push_back(std::move(rel));
	}
	return p;
}

} // namespace ordbraid
