#include "doctest.h"

#include <random>
#include <set>

#include "bigint_oracle.hpp"
#include "ternpow/lemma.hpp"

using namespace ternpow;

namespace {

// d_1..d_count of 2^n by big-integer powm
std::vector<int> tail_of_pow2(const Exponent& n, unsigned count)
{
	return testing::ternary_digits(testing::pow2_mod(testing::to_big(n.value()), count), count);
}

} // namespace

TEST_SUITE("lemma-engine")
{
	TEST_CASE("unit_first")
	{
		const Unit u = unit_first();
		CHECK(u.k == 1);
		CHECK(u.u == Exponent(2));
		CHECK(u.pow == trit_from_integer(4, 54));
		CHECK(trit_digit(u.pow, 1) == 1);
		CHECK(trit_digit(u.pow, 2) == 1);
	}

	TEST_CASE("unit_next")
	{
		const Unit u2 = unit_next(unit_first());
		CHECK(u2.k == 2);
		CHECK(u2.u == Exponent(6));
		CHECK(u2.pow == trit_from_integer(64, 54));
		// 64 = (2101)_3
		CHECK(u2.pow.to_digit_string().substr(50) == "2101");

		Unit u = unit_first();
		for (int i = 0; i < 45; ++i) u = unit_next(u);
		CHECK(u.k == 46);
		CHECK(u.u.to_string() == "5908625413101667397286");
		CHECK(testing::word_value(u.pow) == testing::pow2_mod(testing::to_big(u.u.value()), 54));
	}

	TEST_CASE("unit_exponent overflow is reported")
	{
		CHECK(unit_exponent(80).value() < Exponent::kLimit);
		CHECK_THROWS_AS(unit_exponent(81), std::overflow_error);
		CHECK_THROWS_AS(unit_exponent(0), std::invalid_argument);
	}

	TEST_CASE("order_check examples")
	{
		CHECK(order_check(1));
		CHECK(order_check(2));
		CHECK(order_check(5));

		// independent: least m with 2^m = 1 mod 9
		unsigned m = 1;
		for (unsigned x = 2; x != 1; x = (2 * x) % 9) ++m;
		CHECK(m == 6);
		CHECK_THROWS_AS(order_check(0), std::invalid_argument);
	}

	TEST_CASE("digit_relation examples")
	{
		// 1 = (1)_3, 4 = (11)_3, 16 = (121)_3
		CHECK(digit_relation(1, 0, 0) == 0);
		CHECK(digit_relation(1, 0, 1) == 1);
		CHECK(digit_relation(1, 0, 2) == 2);

		std::mt19937_64 rng(11);
		for (int c = 0; c < 500; ++c)
		{
			const unsigned k = 1 + static_cast<unsigned>(rng() % 30);
			const Exponent j = Exponent::from_wide(rng() % unit_exponent(k).value());
			const auto digits = tail_of_pow2(j, k + 1);
			REQUIRE(digit_relation(k, j, 0) == digits[k]);
			std::set<Trit> values;
			for (unsigned i = 0; i < 3; ++i) values.insert(digit_relation(k, j, i));
			REQUIRE(values.size() == 3); // d_1 of a power of two is never 0
		}
	}

	// Lemma part (i): exhaustive minimality for small k, randomized non-unit checks beyond.
	TEST_CASE("order of 2 modulo 3^k is u_k")
	{
		for (unsigned k = 1; k <= 12; ++k) REQUIRE(order_check(k));

		std::mt19937_64 rng(12);
		for (int c = 0; c < 10000; ++c)
		{
			const unsigned k = 1 + static_cast<unsigned>(rng() % 53);
			const uint128 uk = unit_exponent(k).value();
			const Exponent m = Exponent::from_wide(1 + ((uint128(rng()) << 64) | rng()) % (uk - 1));
			REQUIRE(pow2_mod_pow3(unit_exponent(k), k) == TritWord::one(limbs_for_digits(k)));
			REQUIRE_FALSE(pow2_mod_pow3(m, k) == TritWord::one(limbs_for_digits(k)));
		}
	}

	// Lemma part (ii): equal residues mod 3^k iff exponents differ by a multiple of u_k.
	TEST_CASE("congruent powers differ by multiples of u_k")
	{
		std::mt19937_64 rng(13);
		int congruent = 0;
		for (int c = 0; c < 10000; ++c)
		{
			const unsigned k = 1 + static_cast<unsigned>(rng() % 10);
			const std::uint64_t uk = unit_exponent(k).to_u64(), range = unit_exponent(k + 2).to_u64();
			const std::uint64_t i = rng() % (range - 1);
			std::uint64_t j = c % 2 == 0 ? i + uk * (1 + rng() % 8) : i + 1 + rng() % (range - i - 1);
			if (j >= range) j = i + uk;
			const bool same = pow2_mod_pow3(i, k) == pow2_mod_pow3(j, k);
			if (same) ++congruent;
			REQUIRE(same == ((j - i) % uk == 0));
		}
		CHECK(congruent >= 5000);
	}

	// Lemma part (iii).
	TEST_CASE("digit k+1 moves by i * d_1 when adding i u_k")
	{
		std::mt19937_64 rng(14);
		for (int c = 0; c < 10000; ++c)
		{
			const unsigned k = 1 + static_cast<unsigned>(rng() % 20);
			const Exponent uk = unit_exponent(k);
			const Exponent j = Exponent::from_wide(rng() % uk.value());
			for (unsigned i = 0; i < 3; ++i)
				REQUIRE(trit_digit(pow2_mod_pow3(Exponent(i) * uk + j, k + 1), k + 1) == digit_relation(k, j, i));
		}
	}

	// Appendix observation (a): (a 3^(k-1) + 1)^i = a i 3^(k-1) + 1 (mod 3^k).
	TEST_CASE("binomial collapse of powers near 1")
	{
		std::mt19937_64 rng(15);
		for (int c = 0; c < 10000; ++c)
		{
			const unsigned k = 2 + static_cast<unsigned>(rng() % 17);
			const testing::big mod = testing::pow3(k), third = testing::pow3(k - 1);
			const unsigned a = static_cast<unsigned>(rng() % 3);
			const std::uint64_t i = rng() % 100000;
			const testing::big x = a * third + 1 + mod * (rng() % 1000);

			TritWord base = testing::word_from_big(x, k), acc = trit_from_integer(1, k);
			for (std::uint64_t e = i; e != 0; e >>= 1)
			{
				if (e & 1) acc = trit_truncate(trit_mul_mod(acc, base), k);
				base = trit_truncate(trit_square_mod(base), k);
			}
			REQUIRE(testing::word_value(acc) == (testing::big(a) * i % 3) * third + 1);
		}
	}

	// Appendix observation (b): 2^(u_k) ends in (1 0^(k-1) 1)_3.
	TEST_CASE("trailing digits of 2^(u_k)")
	{
		for (const unsigned kappa : {54u, 504u})
		{
			// u_k itself overflows past k = 80; only the residue is needed here
			TritWord pow = unit_first(kappa).pow;
			for (unsigned k = 1; k < kappa; ++k, pow = trit_cube_mod(pow))
			{
				REQUIRE(pow.digit_unchecked(1) == 1);
				REQUIRE(pow.digit_unchecked(k + 1) == 1);
				for (unsigned d = 2; d <= k; ++d) REQUIRE(pow.digit_unchecked(d) == 0);
			}
		}

		// with (a): 2^(i u_k) ends in ([i mod 3] 0^(k-1) 1)_3
		std::mt19937_64 rng(16);
		const auto ladder = unit_ladder(53, 54);
		for (int c = 0; c < 10000; ++c)
		{
			const Unit& u = ladder[rng() % ladder.size()];
			const std::uint64_t i = rng() % 1000000;
			const TritWord w = pow2_mod_pow3(u.u * i, u.k + 1);
			REQUIRE(w.digit_unchecked(1) == 1);
			REQUIRE(w.digit_unchecked(u.k + 1) == i % 3);
			for (unsigned d = 2; d <= u.k; ++d) REQUIRE(w.digit_unchecked(d) == 0);
		}
	}
}
