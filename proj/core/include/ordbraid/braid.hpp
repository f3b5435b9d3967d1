#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordbraid {

// A word in the Artin generators of B_n. Letter k stands for sigma_|k|^sign(k).
class BraidWord {
public:
	explicit BraidWord(int strands);
	BraidWord(int strands, std::vector<int> letters);

	int strands() const { return strands_; }
	std::span<const int> letters() const { return letters_; }
	std::size_t length() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }

	bool all_positive() const;

	// Whitespace separated letters, "" for the identity.
	std::string text() const;

	friend bool operator==(const BraidWord &, const BraidWord &) = default;
	friend auto operator<=>(const BraidWord &, const BraidWord &) = default;

private:
	int strands_;
	std::vector<int> letters_;
};

// Parses whitespace separated nonzero integers. Does not reduce.
BraidWord parse_braid(std::string_view text, int strands);

// Cancels adjacent k, -k pairs until none remain.
BraidWord free_reduce(const BraidWord &b);

BraidWord product(const BraidWord &a, const BraidWord &b);
BraidWord inverse(const BraidWord &a);

// Same strand count, every letter replaced by its negation.
BraidWord mirror(const BraidWord &a);

// images[j] is the final position (0-based) of the strand starting at j.
struct Permutation {
	std::vector<int> images;

	static Permutation identity(int n);
	int size() const { return static_cast<int>(images.size()); }
	Permutation then(const Permutation &next) const;
	Permutation inverse() const;
	std::vector<std::vector<int>> cycles() const;

	friend bool operator==(const Permutation &, const Permutation &) = default;
};

Permutation permutation_of(const BraidWord &b);

// Element of the free group F_rank, letter k is x_|k|^sign(k).
class FreeWord {
public:
	explicit FreeWord(int rank);
	FreeWord(int rank, std::vector<int> letters);

	int rank() const { return rank_; }
	std::span<const int> letters() const { return letters_; }
	bool empty() const { return letters_.empty(); }

	static FreeWord generator(int rank, int index);
	FreeWord inverse() const;
	FreeWord operator*(const FreeWord &rhs) const;

	// Exponent sum of each generator, length rank.
	std::vector<long> abelianization() const;

	std::string text() const;

	friend bool operator==(const FreeWord &, const FreeWord &) = default;
	friend auto operator<=>(const FreeWord &, const FreeWord &) = default;

private:
	int rank_;
	std::vector<int> letters_; // always freely reduced
};

// Left action of B_n on F_n: sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
FreeWord artin_action(const BraidWord &b, const FreeWord &w);

struct GroupPresentation {
	int generator_count = 0;
	std::vector<FreeWord> relations;
};

// Presentation of the link group of the closure: relations x_i^-1 r(b)(x_i),
// trivial ones dropped and a relation identical to the inverse of an earlier one merged.
GroupPresentation link_group_presentation(const BraidWord &b);

// Cyclically reduced, least rotation of w and of its inverse.
FreeWord cyclic_normal_form(const FreeWord &w);

} // namespace ordbraid
