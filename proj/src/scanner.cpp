#include "ternpow/scanner.hpp"

#include <array>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ternpow {

namespace {

// floor(log_3(2) * 2^256), least significant word first.
constexpr std::array<std::uint64_t, 4> kLog3Of2 = {
	0x7074a123bd97132aull, 0x090a48ddb0de33c5ull, 0x043eaf7791f52142ull, 0xa1849cc1a9a9e94eull};

// Largest exponent for which an ambiguous floor is settled by comparing 2^j with 3^m
// as explicit integers.
constexpr uint128 kExactCompareLimit = uint128{1} << 20;

bool pow3_at_most_pow2(uint128 m, uint128 j)
{
	namespace mp = boost::multiprecision;
	const mp::cpp_int p3 = mp::pow(mp::cpp_int(3), static_cast<unsigned>(m));
	const auto msb = static_cast<uint128>(mp::msb(p3));
	// 2^msb <= 3^m < 2^(msb+1), and 3^m is odd, so 3^m <= 2^j iff msb < j
	return msb < j;
}

} // namespace

uint128 digit_length(const Exponent& j)
{
	const uint128 v = j.value();
	if (v == 0) return 1;

	// 256-bit fraction times 127-bit exponent; the integer part lands in p[4], p[5]
	const std::array<std::uint64_t, 2> jw = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
	std::array<std::uint64_t, 6> p{};
	for (std::size_t a = 0; a < 2; ++a)
	{
		std::uint64_t carry = 0;
		for (std::size_t b = 0; b < 4; ++b)
		{
			const uint128 t = uint128(jw[a]) * kLog3Of2[b] + p[a + b] + carry;
			p[a + b] = static_cast<std::uint64_t>(t);
			carry = static_cast<std::uint64_t>(t >> 64);
		}
		p[a + 4] = carry;
	}
	const uint128 whole = (uint128(p[5]) << 64) | p[4];

	// The truncated constant underestimates by less than j * 2^-256. If adding that
	// much to the fraction could cross an integer, the floor is not yet settled.
	bool ambiguous = true;
	{
		uint128 carry = 0;
		for (std::size_t w = 0; w < 4; ++w)
		{
			const uint128 t = uint128(p[w]) + (w < 2 ? jw[w] : 0) + carry;
			carry = t >> 64;
		}
		ambiguous = carry != 0;
	}
	if (!ambiguous) return whole + 1;

	if (v > kExactCompareLimit)
		throw std::runtime_error("digit_length: cannot settle floor for j = " + j.to_string());
	return pow3_at_most_pow2(whole + 1, v) ? whole + 2 : whole + 1;
}

ScanResult scan(const Exponent& j, const TritWord& pow_j, Trit chi)
{
	ScanResult r;
	r.digit_length = digit_length(j);
	const uint128 len = r.digit_length;
	const auto within = [len](std::uint64_t precision) -> unsigned {
		return static_cast<unsigned>(uint128(precision) < len ? precision : static_cast<std::uint64_t>(len));
	};
	const auto found = [&r](unsigned index) {
		r.first_chi_index = index;
		r.trailing_clean_run = index - 1;
		return r;
	};

	const unsigned kappa = pow_j.kappa();
	if (const auto hit = pow_j.find_digit(chi, 1, within(kappa))) return found(*hit);
	if (len <= kappa)
	{
		r.trailing_clean_run = static_cast<std::uint64_t>(len);
		return r;
	}

	std::uint64_t searched = kappa;
	for (std::uint64_t ell = 2 * std::uint64_t(kappa);; ell *= 2)
	{
		if (ell > (std::uint64_t{1} << 31)) throw std::runtime_error("scan: fallback precision exhausted at j = " + j.to_string());
		const TritWord w = pow2_mod_pow3(j, static_cast<unsigned>(ell));
		if (const auto hit = w.find_digit(chi, static_cast<unsigned>(searched + 1), within(ell))) return found(*hit);
		if (len <= ell)
		{
			r.trailing_clean_run = static_cast<std::uint64_t>(len);
			return r;
		}
		searched = ell;
	}
}

} // namespace ternpow
