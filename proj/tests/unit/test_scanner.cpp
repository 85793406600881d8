#include "doctest.h"

#include <random>

#include "bigint_oracle.hpp"
#include "ternpow/scanner.hpp"

using namespace ternpow;

namespace {

ScanResult naive_scan(const TritVector& v, Trit chi)
{
	ScanResult r;
	r.digit_length = v.length();
	for (std::size_t k = 1; k <= v.length(); ++k)
	{
		if (v.digit(k) == chi)
		{
			r.first_chi_index = k;
			r.trailing_clean_run = k - 1;
			return r;
		}
	}
	r.trailing_clean_run = v.length();
	return r;
}

void require_same(const ScanResult& a, const ScanResult& b)
{
	REQUIRE(a.first_chi_index == b.first_chi_index);
	REQUIRE(a.trailing_clean_run == b.trailing_clean_run);
	REQUIRE(a.digit_length == b.digit_length);
}

} // namespace

TEST_SUITE("scanner")
{
	TEST_CASE("scan examples")
	{
		// 256 = (100111)_3
		const ScanResult zero = scan(8, pow2_mod_pow3(8, 54), 0);
		CHECK(zero.first_chi_index == 4u);
		CHECK(zero.trailing_clean_run == 3);
		CHECK(zero.digit_length == 6);

		const ScanResult two = scan(8, pow2_mod_pow3(8, 54), 2);
		CHECK(two.absent());
		CHECK(two.trailing_clean_run == 6);

		const ScanResult one = scan(0, TritWord::one(3), 0);
		CHECK(one.absent());
		CHECK(one.digit_length == 1);
		CHECK(one.trailing_clean_run == 1);

		const Exponent j = 201015414581294;
		const ScanResult rec = scan(j, pow2_mod_pow3(j, 54), 2);
		CHECK(rec.trailing_clean_run == 98);
		CHECK(rec.first_chi_index == 99u);
	}

	TEST_CASE("digit_length frozen values")
	{
		const std::pair<const char*, const char*> cases[] = {
			{"85070591730234615865843651857942052864", "53673567476534991142986715905065306193"},
			{"5908625413101667397286", "3727927575834285910211"},
			{"710982592620911336", "448580071955907503"},
			{"388128961376647359", "244882109955313840"},
			{"201015414581294", "126826605985841"},
			{"10000000000000000000000", "6309297535714574370996"},
			{"170141183460469231731687303715884105727", "107347134953069982285973431810130612385"},
		};
		for (const auto& [j, len] : cases) CHECK(to_string(digit_length(Exponent::parse(j))) == len);
		CHECK(digit_length(0) == 1);
		CHECK(digit_length(1) == 1);
		CHECK(digit_length(2) == 2);
	}

	// continued-fraction convergents of log_3 2 put j log_3 2 within 1/j of an integer
	TEST_CASE("digit_length at near-integer products")
	{
		const std::pair<const char*, const char*> cases[] = {
			{"9881527843552324", "6234549927241963"},
			{"423372672964960618", "267118416222671843"},
			{"6724555128221608268", "4242721909926539673"},
			{"36143248623210700400", "22803850947114245497"},
			{"7354673373747273033", "4640282259296926457"},
		};
		for (const auto& [j, len] : cases) CHECK(to_string(digit_length(Exponent::parse(j))) == len);

		for (const std::uint64_t j : {1054ull, 24727ull, 50508ull, 125743ull, 176251ull, 301994ull})
		{
			const testing::big p = testing::big(1) << j;
			const auto m = static_cast<unsigned>(digit_length(j));
			REQUIRE(testing::pow3(m - 1) <= p);
			REQUIRE(p < testing::pow3(m));
		}
	}

	TEST_CASE("digit_length matches expansion lengths")
	{
		TritVector v = TritVector::from_integer(1);
		for (std::uint64_t j = 0; j <= 20000; ++j, v.double_in_place()) REQUIRE(digit_length(j) == v.length());
	}

	TEST_CASE("scan agrees with full expansions")
	{
		TritVector v = TritVector::from_integer(1);
		for (std::uint64_t j = 0; j <= 4096; ++j, v.double_in_place())
		{
			const TritWord w = pow2_mod_pow3(j, 54);
			for (Trit chi = 0; chi < 3; ++chi) require_same(scan(j, w, chi), naive_scan(v, chi));
		}
	}

	TEST_CASE("fallback beyond the cached digits")
	{
		const std::pair<std::uint64_t, Trit> cases[] = {
			{143, 0}, {1916, 0}, {2642, 0}, {1135, 1}, {11511, 1}, {13773, 1}, {1134, 2}, {11510, 2}, {13772, 2},
		};
		for (const auto& [j, chi] : cases)
		{
			const auto digits = testing::ternary_digits(testing::big(1) << j, static_cast<unsigned>(digit_length(j)));
			std::uint64_t first = 0;
			while (digits[first] != chi) ++first;
			CHECK(first + 1 > 18);

			// kappa = 18 forces the recomputation at 36, 72, ...
			const ScanResult narrow = scan(j, pow2_mod_pow3(j, 18), chi);
			CHECK(narrow.first_chi_index == first + 1);
			CHECK(narrow.trailing_clean_run == first);
			require_same(narrow, scan(j, pow2_mod_pow3(j, 54), chi));
		}
	}

	TEST_CASE("scan is independent of kappa")
	{
		std::mt19937_64 rng(21);
		for (int c = 0; c < 300; ++c)
		{
			const Exponent j = Exponent::from_wide((uint128(rng()) << 64 | rng()) >> (1 + rng() % 100));
			const Trit chi = static_cast<Trit>(rng() % 3);
			require_same(scan(j, pow2_mod_pow3(j, 18), chi), scan(j, pow2_mod_pow3(j, 54), chi));
		}
	}
}
