#include "ordbraid/garside.hpp"

#include <algorithm>
#include <cstdlib>

namespace ordbraid {

namespace {

// Permutation braids use Permutation::images[j] = final position of the strand
// starting at position j, so x * y corresponds to x.then(y).

Permutation transposition(int n, int i)
{
	auto p = Permutation::identity(n);
	std::swap(p.images[i - 1], p.images[i]);
	return p;
}

Permutation half_twist(int n)
{
	Permutation p;
	p.images.resize(n);
	for (int j = 0; j < n; ++j)
		p.images[j] = n - 1 - j;
	return p;
}

// Delta x Delta^-1
Permutation flip(const Permutation &x)
{
	int n = x.size();
	Permutation r;
	r.images.resize(n);
	for (int j = 0; j < n; ++j)
		r.images[j] = n - 1 - x.images[n - 1 - j];
	return r;
}

// sigma_i * t is simple iff i is not a starting letter of t.
bool starts_with(const Permutation &t, int i) { return t.images[i - 1] > t.images[i]; }

bool finishes_with(const Permutation &s, int i)
{
	auto inv = s.inverse();
	return inv.images[i - 1] > inv.images[i];
}

bool is_identity(const Permutation &p)
{
	for (int j = 0; j < p.size(); ++j)
		if (p.images[j] != j)
			return false;
	return true;
}

// Moves starting letters of t into s until the pair is left-weighted.
bool left_weight(Permutation &s, Permutation &t)
{
	bool changed = false;
	int n = s.size();
	for (bool again = true; again;) {
		again = false;
		for (int i = 1; i < n; ++i) {
			if (starts_with(t, i) && !finishes_with(s, i)) {
				auto tau = transposition(n, i);
				s = s.then(tau);
				t = tau.then(t);
				again = changed = true;
			}
		}
	}
	return changed;
}

} // namespace

GarsideNormalForm garside_normal_form(const BraidWord &b)
{
	int n = b.strands();
	auto delta = half_twist(n);

	// b = Delta^-neg * factors, each factor simple
	int neg = 0;
	std::vector<Permutation> factors;
	for (int k : b.letters()) {
		int i = std::abs(k);
		if (k > 0) {
			factors.push_back(transposition(n, i));
		} else {
			// sigma_i^-1 = Delta^-1 (Delta sigma_i^-1)
			for (auto &f : factors)
				f = flip(f);
			factors.push_back(delta.then(transposition(n, i)));
			++neg;
		}
	}

	for (bool again = true; again;) {
		again = false;
		for (std::size_t j = 0; j + 1 < factors.size(); ++j)
			again |= left_weight(factors[j], factors[j + 1]);
	}

	GarsideNormalForm nf;
	nf.strands = n;
	std::size_t lead = 0;
	while (lead < factors.size() && factors[lead] == delta)
		++lead;
	nf.delta_power = static_cast<int>(lead) - neg;
	for (std::size_t j = lead; j < factors.size(); ++j)
		if (!is_identity(factors[j]))
			nf.factors.push_back(factors[j]);
	return nf;
}

BraidWord simple_braid_word(int strands, const Permutation &p)
{
	std::vector<int> letters;
	Permutation t = p;
	for (bool again = true; again;) {
		again = false;
		for (int i = 1; i < strands; ++i) {
			if (starts_with(t, i)) {
				letters.push_back(i);
				t = transposition(strands, i).then(t);
				again = true;
				break;
			}
		}
	}
	return BraidWord(strands, std::move(letters));
}

BraidWord delta_word(int strands, int power)
{
	auto d = simple_braid_word(strands, half_twist(strands));
	std::vector<int> letters;
	for (int r = 0; r < power; ++r)
		letters.insert(letters.end(), d.letters().begin(), d.letters().end());
	return BraidWord(strands, std::move(letters));
}

std::pair<BraidWord, BraidWord> positive_decompose(const BraidWord &b)
{
	int n = b.strands();
	auto nf = garside_normal_form(b);
	std::vector<int> rhs;
	if (nf.delta_power > 0) {
		auto d = delta_word(n, nf.delta_power);
		rhs.assign(d.letters().begin(), d.letters().end());
	}
	for (const auto &f : nf.factors) {
		auto w = simple_braid_word(n, f);
		rhs.insert(rhs.end(), w.letters().begin(), w.letters().end());
	}
	BraidWord lhs = nf.delta_power < 0 ? delta_word(n, -nf.delta_power) : BraidWord(n);
	return {std::move(lhs), BraidWord(n, std::move(rhs))};
}

} // namespace ordbraid
