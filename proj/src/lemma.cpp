#include "ternpow/lemma.hpp"

#include <stdexcept>

namespace ternpow {

Exponent unit_exponent(unsigned k)
{
	if (k < 1) throw std::invalid_argument("unit index must be positive");
	Exponent u = 2;
	for (unsigned i = 1; i < k; ++i) u = u * 3;
	return u;
}

Unit unit_first(unsigned kappa)
{
	return Unit{1, 2, trit_from_integer(4, kappa)};
}

Unit unit_next(const Unit& unit)
{
	return Unit{unit.k + 1, unit.u * 3, trit_cube_mod(unit.pow)};
}

std::vector<Unit> unit_ladder(unsigned depth, unsigned kappa)
{
	std::vector<Unit> ladder;
	if (depth == 0) return ladder;
	ladder.reserve(depth);
	ladder.push_back(unit_first(kappa));
	while (ladder.size() < depth) ladder.push_back(unit_next(ladder.back()));
	return ladder;
}

bool order_check(unsigned k)
{
	// 3^79 < 2^126, so doubling below the modulus stays inside 128 bits
	if (k < 1 || k > 79) throw std::invalid_argument("order_check: k must be in [1, 79]");
	uint128 modulus = 1;
	for (unsigned i = 0; i < k; ++i) modulus *= 3;
	const uint128 order = unit_exponent(k).value();

	uint128 x = 1;
	for (uint128 m = 1; m <= order; ++m)
	{
		x <<= 1;
		if (x >= modulus) x -= modulus;
		if (x == 1) return m == order;
	}
	return false;
}

Trit digit_relation(unsigned k, const Exponent& j, unsigned i)
{
	if (k < 1) throw std::invalid_argument("digit_relation: k must be positive");
	const TritWord w = pow2_mod_pow3(j, k + 1);
	return static_cast<Trit>((w.digit_unchecked(k + 1) + checked_trit(i) * w.digit_unchecked(1)) % 3);
}

} // namespace ternpow
