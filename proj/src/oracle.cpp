#include "ternpow/oracle.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace ternpow::oracle {

const std::vector<std::uint64_t>& OracleReport::avoiders(Trit chi) const
{
	switch (chi)
	{
	case 0: return counterexamples_sloane;
	case 1: return counterexamples_ones;
	case 2: return counterexamples_erdos;
	default: throw std::invalid_argument("digit must be 0, 1 or 2");
	}
}

OracleReport sweep(std::uint64_t max_exponent)
{
	if (max_exponent > kMaxSweep)
		throw std::invalid_argument("oracle sweep limited to exponents <= " + std::to_string(kMaxSweep));

	OracleReport report;
	report.max_exponent = max_exponent;
	std::array<std::map<unsigned, RecordEntry>, 3> best;
	const std::array<std::vector<std::uint64_t>*, 3> lists = {
		&report.counterexamples_sloane, &report.counterexamples_ones, &report.counterexamples_erdos};

	TritVector v = TritVector::from_integer(1);
	for (std::uint64_t n = 0; n <= max_exponent; ++n)
	{
		const auto digits = v.digits();
		const std::size_t length = digits.size();
		for (unsigned chi = 0; chi < 3; ++chi)
		{
			std::size_t run = 0;
			while (run < length && digits[run] != chi) ++run;
			if (run == length) lists[chi]->push_back(n);
			// n only grows, so the first n reaching a run of k is rho(k)
			for (unsigned k = static_cast<unsigned>(best[chi].size()) + 1; k <= run; ++k)
				best[chi].emplace(k, RecordEntry{n, length});
		}
		if (n < max_exponent) v.double_in_place();
	}

	for (unsigned chi = 0; chi < 3; ++chi)
		report.record_tables[chi] = RecordTable::from_entries(static_cast<Trit>(chi), best[chi], Exponent(max_exponent + 1));
	return report;
}

std::vector<std::uint64_t> survivor_set(unsigned k, Trit chi)
{
	if (k < 1 || k > 10) throw std::invalid_argument("survivor_set: k must be in [1, 10]");
	std::uint64_t period = 2;
	for (unsigned i = 1; i < k; ++i) period *= 3;

	std::vector<std::uint64_t> out;
	std::vector<Trit> tail(k, 0); // last k digits of 2^n, least significant first
	tail[0] = 1;
	for (std::uint64_t n = 0; n < period; ++n)
	{
		bool clean = true;
		for (const Trit d : tail) clean = clean && d != chi;
		if (clean) out.push_back(n);

		Trit carry = 0;
		for (Trit& d : tail)
		{
			const unsigned t = 2u * d + carry;
			d = static_cast<Trit>(t % 3);
			carry = static_cast<Trit>(t / 3);
		}
	}
	return out;
}

const std::vector<std::uint64_t>& known_exceptions(Trit chi)
{
	static const std::vector<std::uint64_t> no0 = {0, 1, 2, 3, 4, 15};
	static const std::vector<std::uint64_t> no1 = {1, 3, 9};
	static const std::vector<std::uint64_t> no2 = {0, 2, 8};
	switch (chi)
	{
	case 0: return no0;
	case 1: return no1;
	case 2: return no2;
	default: throw std::invalid_argument("digit must be 0, 1 or 2");
	}
}

} // namespace ternpow::oracle
