#include "ternpow/ternary_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternpow {

namespace {

constexpr std::array<std::uint32_t, 19> kPow3 = [] {
	std::array<std::uint32_t, 19> p{};
	p[0] = 1;
	for (std::size_t i = 1; i < p.size(); ++i) p[i] = p[i - 1] * 3;
	return p;
}();

constexpr std::uint64_t kRadix = TritWord::kLimbRadix;

} // namespace

std::string to_string(uint128 value)
{
	if (value == 0) return "0";
	std::string s;
	while (value != 0)
	{
		s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
		value /= 10;
	}
	std::reverse(s.begin(), s.end());
	return s;
}

uint128 parse_uint128(std::string_view text)
{
	if (text.empty()) throw std::invalid_argument("empty integer");
	constexpr uint128 kMax = ~uint128{0};
	uint128 v = 0;
	for (const char c : text)
	{
		if (c < '0' || c > '9') throw std::invalid_argument("not a decimal integer: " + std::string(text));
		const unsigned d = static_cast<unsigned>(c - '0');
		if (v > (kMax - d) / 10) throw std::overflow_error("integer too large: " + std::string(text));
		v = v * 10 + d;
	}
	return v;
}

Trit checked_trit(unsigned d)
{
	if (d > 2) throw std::invalid_argument("ternary digit must be 0, 1 or 2, got " + std::to_string(d));
	return static_cast<Trit>(d);
}

// Exponent

Exponent Exponent::from_wide(uint128 v)
{
	if (v >= kLimit) throw std::overflow_error("exponent out of range: " + ternpow::to_string(v));
	Exponent e;
	e.value_ = v;
	return e;
}

Exponent Exponent::parse(std::string_view text) { return from_wide(parse_uint128(text)); }

unsigned Exponent::bit_width() const
{
	const std::uint64_t hi = static_cast<std::uint64_t>(value_ >> 64), lo = static_cast<std::uint64_t>(value_);
	if (hi != 0) return 128 - static_cast<unsigned>(__builtin_clzll(hi));
	if (lo != 0) return 64 - static_cast<unsigned>(__builtin_clzll(lo));
	return 0;
}

std::uint64_t Exponent::to_u64() const
{
	if ((value_ >> 64) != 0) throw std::overflow_error("exponent exceeds 64 bits: " + to_string());
	return static_cast<std::uint64_t>(value_);
}

Exponent operator+(const Exponent& a, const Exponent& b)
{
	// both operands are below 2^127, so the sum cannot wrap
	return Exponent::from_wide(a.value_ + b.value_);
}

Exponent operator-(const Exponent& a, const Exponent& b)
{
	if (b.value_ > a.value_) throw std::overflow_error("exponent underflow");
	return Exponent::from_wide(a.value_ - b.value_);
}

Exponent operator*(const Exponent& a, const Exponent& b)
{
	if (a.value_ != 0 && b.value_ > (Exponent::kLimit - 1) / a.value_)
		throw std::overflow_error("exponent overflow: " + a.to_string() + " * " + b.to_string());
	return Exponent::from_wide(a.value_ * b.value_);
}

Exponent operator%(const Exponent& a, const Exponent& b)
{
	if (b.value_ == 0) throw std::domain_error("exponent modulo zero");
	return Exponent::from_wide(a.value_ % b.value_);
}

// TritWord

TritWord::TritWord(std::size_t limb_count) : limbs_(std::max<std::size_t>(limb_count, 1), 0) {}

TritWord TritWord::one(std::size_t limb_count)
{
	TritWord w(limb_count);
	w.limbs_[0] = 1;
	return w;
}

TritWord TritWord::from_limbs(std::span<const std::uint32_t> limbs)
{
	if (limbs.empty()) throw std::invalid_argument("TritWord needs at least one limb");
	TritWord w(limbs.size());
	for (std::size_t i = 0; i < limbs.size(); ++i)
	{
		if (limbs[i] >= kLimbRadix) throw std::invalid_argument("limb not below 3^18");
		w.limbs_[i] = limbs[i];
	}
	return w;
}

bool TritWord::is_zero() const
{
	return std::all_of(limbs_.begin(), limbs_.end(), [](std::uint32_t l) { return l == 0; });
}

Trit TritWord::digit_unchecked(unsigned k) const
{
	const unsigned idx = (k - 1) / kDigitsPerLimb, pos = (k - 1) % kDigitsPerLimb;
	return static_cast<Trit>((limbs_[idx] / kPow3[pos]) % 3);
}

std::optional<unsigned> TritWord::find_digit(Trit chi, unsigned from, unsigned to) const
{
	unsigned k = from;
	while (k <= to)
	{
		unsigned pos = (k - 1) % kDigitsPerLimb;
		std::uint32_t v = limbs_[(k - 1) / kDigitsPerLimb] / kPow3[pos];
		for (; pos < kDigitsPerLimb && k <= to; ++pos, ++k)
		{
			if (v % 3 == chi) return k;
			v /= 3;
		}
	}
	return std::nullopt;
}

std::string TritWord::to_digit_string() const
{
	std::string s;
	s.reserve(kappa());
	for (unsigned k = kappa(); k >= 1; --k) s.push_back(static_cast<char>('0' + digit_unchecked(k)));
	return s;
}

std::size_t limbs_for_digits(unsigned digits)
{
	return std::max<std::size_t>(1, (digits + TritWord::kDigitsPerLimb - 1) / TritWord::kDigitsPerLimb);
}

TritWord trit_truncate(const TritWord& a, unsigned digits)
{
	TritWord r = a;
	const std::size_t n = r.limbs_.size();
	const std::size_t full = digits / TritWord::kDigitsPerLimb, part = digits % TritWord::kDigitsPerLimb;
	if (full >= n) return r;
	r.limbs_[full] %= kPow3[part];
	for (std::size_t i = full + 1; i < n; ++i) r.limbs_[i] = 0;
	return r;
}

TritWord trit_from_integer(uint128 x, unsigned kappa)
{
	TritWord w(limbs_for_digits(kappa));
	std::vector<std::uint32_t> limbs(w.limb_count(), 0);
	for (std::size_t i = 0; i < limbs.size() && x != 0; ++i)
	{
		limbs[i] = static_cast<std::uint32_t>(x % kRadix);
		x /= kRadix;
	}
	return trit_truncate(TritWord::from_limbs(limbs), kappa);
}

// Only columns below the limb count are formed: dropping higher limbs is exactly
// the reduction modulo 3^kappa. Column sums are folded into the carry every 32
// products so that the 64-bit accumulator never overflows for any limb count.
TritWord trit_mul_mod(const TritWord& a, const TritWord& b)
{
	const std::size_t n = a.limbs_.size();
	if (b.limbs_.size() != n) throw std::invalid_argument("trit_mul_mod: precision mismatch");
	TritWord r(n);
	const std::uint32_t* pa = a.limbs_.data();
	const std::uint32_t* pb = b.limbs_.data();
	std::uint64_t carry = 0;
	for (std::size_t c = 0; c < n; ++c)
	{
		std::uint64_t acc = carry, spill = 0;
		for (std::size_t i = 0; i <= c; ++i)
		{
			acc += std::uint64_t(pa[i]) * pb[c - i];
			if ((i & 31) == 31) { spill += acc / kRadix; acc %= kRadix; }
		}
		r.limbs_[c] = static_cast<std::uint32_t>(acc % kRadix);
		carry = spill + acc / kRadix;
	}
	return r;
}

TritWord trit_square_mod(const TritWord& a)
{
	const std::size_t n = a.limbs_.size();
	TritWord r(n);
	const std::uint32_t* pa = a.limbs_.data();
	std::uint64_t carry = 0;
	for (std::size_t c = 0; c < n; ++c)
	{
		std::uint64_t acc = carry, spill = 0;
		std::size_t terms = 0;
		for (std::size_t i = 0; 2 * i < c; ++i)
		{
			acc += (std::uint64_t(pa[i]) * pa[c - i]) << 1;
			if ((++terms & 15) == 0) { spill += acc / kRadix; acc %= kRadix; }
		}
		if (c % 2 == 0) acc += std::uint64_t(pa[c / 2]) * pa[c / 2];
		r.limbs_[c] = static_cast<std::uint32_t>(acc % kRadix);
		carry = spill + acc / kRadix;
	}
	return r;
}

TritWord trit_cube_mod(const TritWord& a) { return trit_mul_mod(trit_square_mod(a), a); }

TritWord trit_double_mod(const TritWord& a)
{
	TritWord r = a;
	std::uint32_t carry = 0;
	for (auto& limb : r.limbs_)
	{
		std::uint32_t t = 2 * limb + carry;
		carry = 0;
		if (t >= TritWord::kLimbRadix) { t -= TritWord::kLimbRadix; carry = 1; }
		limb = t;
	}
	return r;
}

Trit trit_digit(const TritWord& a, unsigned k)
{
	if (k < 1 || k > a.kappa())
		throw std::out_of_range("digit index " + std::to_string(k) + " outside [1, " + std::to_string(a.kappa()) + "]");
	return a.digit_unchecked(k);
}

std::optional<unsigned> trit_first_occurrence(const TritWord& a, Trit chi)
{
	return a.find_digit(checked_trit(chi), 1, a.kappa());
}

TritWord pow2_mod_pow3(const Exponent& n, unsigned ell)
{
	if (ell < 1) throw std::invalid_argument("pow2_mod_pow3: precision must be positive");
	TritWord r = TritWord::one(limbs_for_digits(ell));
	for (unsigned b = n.bit_width(); b-- > 0;)
	{
		r = trit_square_mod(r);
		if (n.bit(b)) r = trit_double_mod(r);
	}
	return trit_truncate(r, ell);
}

// TritVector

TritVector::TritVector() : digits_{0} {}

TritVector TritVector::from_integer(uint128 x)
{
	std::vector<Trit> d;
	do
	{
		d.push_back(static_cast<Trit>(x % 3));
		x /= 3;
	} while (x != 0);
	return from_digits(std::move(d));
}

TritVector TritVector::from_digits(std::vector<Trit> digits)
{
	for (const Trit t : digits) checked_trit(t);
	TritVector v;
	v.digits_ = std::move(digits);
	v.canonicalize();
	return v;
}

TritVector TritVector::parse(std::string_view text)
{
	std::vector<Trit> d;
	d.reserve(text.size());
	for (auto it = text.rbegin(); it != text.rend(); ++it)
	{
		if (*it < '0' || *it > '2') throw std::invalid_argument("not a ternary digit string: " + std::string(text));
		d.push_back(static_cast<Trit>(*it - '0'));
	}
	return from_digits(std::move(d));
}

void TritVector::canonicalize()
{
	while (digits_.size() > 1 && digits_.back() == 0) digits_.pop_back();
	if (digits_.empty()) digits_.push_back(0);
}

void TritVector::double_in_place()
{
	Trit carry = 0;
	for (auto& d : digits_)
	{
		const Trit t = static_cast<Trit>(2 * d + carry);
		carry = t >= 3;
		d = carry ? static_cast<Trit>(t - 3) : t;
	}
	if (carry) digits_.push_back(carry);
	canonicalize();
}

std::string TritVector::to_string() const
{
	std::string s(digits_.size(), '0');
	for (std::size_t i = 0; i < digits_.size(); ++i) s[digits_.size() - 1 - i] = static_cast<char>('0' + digits_[i]);
	return s;
}

TritVector tritvec_double(const TritVector& v)
{
	TritVector r = v;
	r.double_in_place();
	return r;
}

} // namespace ternpow
