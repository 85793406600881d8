#pragma once

// First occurrence of a digit in the ternary expansion of 2^j.

#include <cstdint>
#include <optional>

#include "ternpow/ternary_core.hpp"

namespace ternpow {

struct ScanResult {
	/// 1-based position of the first chi, or nullopt when chi appears nowhere in 2^j.
	std::optional<std::uint64_t> first_chi_index;
	/// Number of trailing non-chi digits, capped at digit_length.
	std::uint64_t trailing_clean_run = 0;
	/// Ternary digit count of 2^j.
	uint128 digit_length = 1;

	bool absent() const { return !first_chi_index.has_value(); }
};

/// floor(j log_3 2) + 1, exact.
uint128 digit_length(const Exponent& j);

/// Searches the kappa cached digits of pow_j = 2^j mod 3^kappa and, when they are
/// all clean but 2^j is longer, recomputes 2^j mod 3^ell for ell = 2 kappa,
/// 4 kappa, ... until chi turns up or ell covers the whole expansion.
ScanResult scan(const Exponent& j, const TritWord& pow_j, Trit chi);

} // namespace ternpow
