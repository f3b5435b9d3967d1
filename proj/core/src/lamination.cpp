// Dynnikov coordinates of integral laminations on the n-punctured disk.
// A braid acts on the right on Z^{2n}; its sign is read from the image of the
// reference lamination (0, 1, 0, 1, ..., 0, 1).

#include "ordbraid/dehornoy.hpp"

#include "ordbraid/error.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <vector>

namespace ordbraid {

namespace {

using Int = mpz_class;

Int pos(const Int &t) { return t > 0 ? t : Int(0); }
Int neg(const Int &t) { return t < 0 ? t : Int(0); }

struct Coordinates {
	std::vector<Int> x, y; // 1-based, slots 1..n
};

void act(Coordinates &c, int letter)
{
	int i = std::abs(letter);
	Int &x1 = c.x[i], &y1 = c.y[i], &x2 = c.x[i + 1], &y2 = c.y[i + 1];
	Int nx1, ny1, nx2, ny2;
	if (letter > 0) {
		Int z = x1 - neg(y1) - x2 + pos(y2);
		nx1 = x1 + pos(y1) + pos(pos(y2) - z);
		ny1 = y2 - pos(z);
		nx2 = x2 + neg(y2) + neg(neg(y1) + z);
		ny2 = y1 + pos(z);
	} else {
		Int z = x1 + neg(y1) - x2 - pos(y2);
		nx1 = x1 - pos(y1) - pos(pos(y2) + z);
		ny1 = y2 + neg(z);
		nx2 = x2 - neg(y2) - neg(neg(y1) - z);
		ny2 = y1 - neg(z);
	}
	x1 = nx1;
	y1 = ny1;
	x2 = nx2;
	y2 = ny2;
}

} // namespace

DehornoySign lamination_sign(const BraidWord &b, const LaminationOptions &options)
{
	int n = b.strands();
	if (n > options.max_strands)
		throw CapExceeded("lamination oracle limited to " + std::to_string(options.max_strands) +
		                  " strands");
	Coordinates c;
	c.x.assign(n + 1, 0);
	c.y.assign(n + 1, 1);
	for (int k : b.letters())
		act(c, k);

	// the first nonzero entry of (x_1, y_1 - 1, ..., x_n, y_n - 1) carries the sign
	DehornoySign s{Verdict::Identity, BraidWord(n)};
	for (int j = 1; j <= n; ++j) {
		for (const Int &v : {Int(c.x[j]), Int(c.y[j] - 1)}) {
			if (v != 0) {
				s.verdict = v > 0 ? Verdict::Positive : Verdict::Negative;
				return s;
			}
		}
	}
	return s;
}

} // namespace ordbraid
