#pragma once

// Test-only reference arithmetic on boost::multiprecision integers, independent
// of the limb code under test.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ternpow/ternary_core.hpp"

namespace ternpow::testing {

using big = boost::multiprecision::cpp_int;

inline big pow3(unsigned e) { return boost::multiprecision::pow(big(3), e); }

inline big to_big(uint128 v)
{
	big b = static_cast<std::uint64_t>(v >> 64);
	b <<= 64;
	b += static_cast<std::uint64_t>(v);
	return b;
}

inline big word_value(const TritWord& w)
{
	big v = 0;
	const auto limbs = w.limbs();
	for (std::size_t i = limbs.size(); i-- > 0;) v = v * TritWord::kLimbRadix + limbs[i];
	return v;
}

inline TritWord word_from_big(big x, unsigned kappa)
{
	std::vector<std::uint32_t> limbs(limbs_for_digits(kappa));
	x %= pow3(kappa);
	for (auto& l : limbs)
	{
		l = static_cast<std::uint32_t>(x % TritWord::kLimbRadix);
		x /= TritWord::kLimbRadix;
	}
	return TritWord::from_limbs(limbs);
}

/// 2^n mod 3^digits via boost::multiprecision::powm.
inline big pow2_mod(const big& n, unsigned digits)
{
	return boost::multiprecision::powm(big(2), n, pow3(digits));
}

/// Least significant digit first, exactly `count` digits.
inline std::vector<int> ternary_digits(big x, unsigned count)
{
	std::vector<int> d(count);
	for (auto& t : d)
	{
		t = static_cast<int>(x % 3);
		x /= 3;
	}
	return d;
}

} // namespace ternpow::testing
