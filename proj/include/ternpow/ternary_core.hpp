#pragma once

// Exact arithmetic on ternary expansions.
//
// TritWord is the fixed-precision residue modulo 3^kappa used on the hot path.
// It is stored as base-3^18 limbs held in 32-bit words, least significant limb
// first, so kappa is always a multiple of 18. TritVector is the growable exact
// expansion used by the brute-force oracle.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace ternpow {

using uint128 = unsigned __int128;

/// A single ternary digit, 0, 1 or 2.
using Trit = std::uint8_t;

std::string to_string(uint128 value);
uint128 parse_uint128(std::string_view text);

/// Throws std::invalid_argument unless d is 0, 1 or 2.
Trit checked_trit(unsigned d);

/// Exponent n of 2^n. Values are kept below 2^127 and every arithmetic
/// operation is overflow-checked (std::overflow_error).
class Exponent {
public:
	static constexpr uint128 kLimit = uint128{1} << 127;

	constexpr Exponent() = default;
	constexpr Exponent(std::uint64_t v) : value_(v) {}

	static Exponent from_wide(uint128 v);
	static Exponent parse(std::string_view text);

	constexpr uint128 value() const { return value_; }
	std::string to_string() const { return ternpow::to_string(value_); }

	/// Number of significant bits (0 for zero).
	unsigned bit_width() const;
	bool bit(unsigned i) const { return ((value_ >> i) & 1u) != 0; }

	/// Narrowing accessor; throws std::overflow_error if the value needs more than 64 bits.
	std::uint64_t to_u64() const;

	friend Exponent operator+(const Exponent& a, const Exponent& b);
	friend Exponent operator-(const Exponent& a, const Exponent& b);
	friend Exponent operator*(const Exponent& a, const Exponent& b);
	friend Exponent operator%(const Exponent& a, const Exponent& b);

	friend constexpr bool operator==(const Exponent&, const Exponent&) = default;
	friend constexpr auto operator<=>(const Exponent& a, const Exponent& b) { return a.value_ <=> b.value_; }

private:
	uint128 value_ = 0;
};

/// Residue modulo 3^kappa as base-3^18 limbs (kappa = 18 * limb_count()).
class TritWord {
public:
	static constexpr unsigned kDigitsPerLimb = 18;
	static constexpr std::uint32_t kLimbRadix = 387420489; // 3^18
	using Limbs = boost::container::small_vector<std::uint32_t, 4>;

	/// Zero with the given number of limbs (at least one).
	explicit TritWord(std::size_t limb_count = 3);

	static TritWord one(std::size_t limb_count);
	/// Throws std::invalid_argument if a limb is not below 3^18.
	static TritWord from_limbs(std::span<const std::uint32_t> limbs);

	std::size_t limb_count() const { return limbs_.size(); }
	unsigned kappa() const { return static_cast<unsigned>(limbs_.size()) * kDigitsPerLimb; }
	std::span<const std::uint32_t> limbs() const { return {limbs_.data(), limbs_.size()}; }
	bool is_zero() const;

	/// d_k, 1 <= k <= kappa(). Unchecked.
	Trit digit_unchecked(unsigned k) const;

	/// Smallest k in [from, to] with d_k == chi. Requires 1 <= from and to <= kappa().
	std::optional<unsigned> find_digit(Trit chi, unsigned from, unsigned to) const;

	/// Most significant digit first, all kappa digits.
	std::string to_digit_string() const;

	friend bool operator==(const TritWord& a, const TritWord& b) { return a.limbs_ == b.limbs_; }

private:
	friend TritWord trit_mul_mod(const TritWord&, const TritWord&);
	friend TritWord trit_square_mod(const TritWord&);
	friend TritWord trit_double_mod(const TritWord&);
	friend TritWord trit_truncate(const TritWord&, unsigned);

	Limbs limbs_;
};

/// Limbs needed to hold kappa digits (rounded up, at least one).
std::size_t limbs_for_digits(unsigned digits);

/// x mod 3^kappa. The word carries ceil(kappa / 18) limbs.
TritWord trit_from_integer(uint128 x, unsigned kappa);

/// (a * b) mod 3^kappa. Both operands must carry the same number of limbs.
TritWord trit_mul_mod(const TritWord& a, const TritWord& b);
TritWord trit_square_mod(const TritWord& a);
TritWord trit_cube_mod(const TritWord& a);
TritWord trit_double_mod(const TritWord& a);

/// Keeps digits d_1..d_digits, zeroing the rest. Limb count is unchanged.
TritWord trit_truncate(const TritWord& a, unsigned digits);

/// d_k of the residue; throws std::out_of_range unless 1 <= k <= kappa.
Trit trit_digit(const TritWord& a, unsigned k);

/// min{ i in [1, kappa] : d_i(a) == chi }, or nullopt.
std::optional<unsigned> trit_first_occurrence(const TritWord& a, Trit chi);

/// 2^n mod 3^ell by left-to-right square-and-multiply at ceil(ell / 18) limbs.
TritWord pow2_mod_pow3(const Exponent& n, unsigned ell);

/// Exact ternary expansion, least significant digit first.
class TritVector {
public:
	/// The value 0, stored as the single digit 0.
	TritVector();

	static TritVector from_integer(uint128 x);
	/// Least significant digit first; high zero digits are dropped.
	static TritVector from_digits(std::vector<Trit> digits);
	/// Parses a digit string written most significant first, e.g. "100111".
	static TritVector parse(std::string_view text);

	/// Number of stored digits; 1 for zero.
	std::size_t length() const { return digits_.size(); }
	/// d_k, zero above the stored length. k is 1-based.
	Trit digit(std::size_t k) const { return k - 1 < digits_.size() ? digits_[k - 1] : Trit{0}; }
	std::span<const Trit> digits() const { return digits_; }
	bool is_zero() const { return digits_.size() == 1 && digits_[0] == 0; }

	void double_in_place();

	std::string to_string() const;

	friend bool operator==(const TritVector&, const TritVector&) = default;

private:
	void canonicalize();

	std::vector<Trit> digits_;
};

TritVector tritvec_double(const TritVector& v);

} // namespace ternpow
