#pragma once

// The unit sequence u_k = 2 * 3^(k-1), the multiplicative order of 2 modulo 3^k,
// and the digit identities the generator relies on.

#include <vector>

#include "ternpow/ternary_core.hpp"

namespace ternpow {

/// u_k = 2 * 3^(k-1) together with 2^(u_k) mod 3^kappa.
struct Unit {
	unsigned k = 1;
	Exponent u = 2;
	TritWord pow;
};

/// u_k for k >= 1; overflow-checked.
Exponent unit_exponent(unsigned k);

/// k = 1, u = 2, pow = 4.
Unit unit_first(unsigned kappa = 54);

/// k + 1, 3u, pow^3.
Unit unit_next(const Unit& unit);

/// Units for k = 1..depth, index k - 1.
std::vector<Unit> unit_ladder(unsigned depth, unsigned kappa);

/// True iff u_k is the least positive m with 2^m = 1 (mod 3^k).
/// Iterates 2^m directly, so the cost is linear in u_k; meant for small k.
bool order_check(unsigned k);

/// (d_{k+1}(2^j) + i * d_1(2^j)) mod 3, which equals d_{k+1}(2^(i u_k + j)).
Trit digit_relation(unsigned k, const Exponent& j, unsigned i);

} // namespace ternpow
