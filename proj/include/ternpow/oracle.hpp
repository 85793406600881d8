#pragma once

// Brute-force reference: exact expansions of 2^n by repeated doubling.
// Nothing here touches TritWord, the scanner or the generator.

#include <array>
#include <cstdint>
#include <vector>

#include "ternpow/records.hpp"

namespace ternpow::oracle {

inline constexpr std::uint64_t kMaxSweep = 100000;

struct OracleReport {
	std::uint64_t max_exponent = 0;
	std::vector<std::uint64_t> counterexamples_erdos;  // no 2 anywhere
	std::vector<std::uint64_t> counterexamples_sloane; // no 0 anywhere
	std::vector<std::uint64_t> counterexamples_ones;   // no 1 anywhere
	/// Indexed by chi; certified up to max_exponent + 1.
	std::array<RecordTable, 3> record_tables{RecordTable(0), RecordTable(1), RecordTable(2)};

	const std::vector<std::uint64_t>& avoiders(Trit chi) const;
};

/// Expansions of 2^0 .. 2^max_exponent. Throws std::invalid_argument above kMaxSweep.
OracleReport sweep(std::uint64_t max_exponent);

/// { n < u_k : d_i(2^n) != chi for i = 1..k }, digits beyond the length of 2^n
/// counting as 0. Requires u_k <= kMaxSweep (k <= 10). Sorted ascending.
std::vector<std::uint64_t> survivor_set(unsigned k, Trit chi);

/// The exceptional exponents the conjectures allow: {0,2,8}, {1,3,9}, {0,1,2,3,4,15}
/// for chi = 2, 1, 0.
const std::vector<std::uint64_t>& known_exceptions(Trit chi);

} // namespace ternpow::oracle
