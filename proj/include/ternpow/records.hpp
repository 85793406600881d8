#pragma once

// Record breakers rho_chi(k): the smallest n such that 2^n has at least k ternary
// digits and no chi among its last k digits.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ternpow/scanner.hpp"
#include "ternpow/ternary_core.hpp"

namespace ternpow {

struct RecordEntry {
	Exponent n;
	uint128 digit_length = 1;

	friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

class RecordTable {
public:
	explicit RecordTable(Trit chi = 2);

	/// Builds a table from explicit entries; throws std::invalid_argument unless the
	/// keys are exactly 1..max and the exponents are nondecreasing in k.
	static RecordTable from_entries(Trit chi, const std::map<unsigned, RecordEntry>& entries,
	                                std::optional<Exponent> certified_up_to = std::nullopt);

	Trit chi() const { return chi_; }

	/// Candidate j whose expansion has `run` trailing non-chi digits (already capped
	/// at digit_length): lowers entries[k] for every k <= run.
	void offer(const Exponent& j, std::uint64_t run, uint128 digit_length);
	void offer(const Exponent& j, const ScanResult& scan) { offer(j, scan.trailing_clean_run, scan.digit_length); }

	std::optional<RecordEntry> at(unsigned k) const;
	/// Largest k with an entry, 0 when empty.
	unsigned max_k() const { return static_cast<unsigned>(entries_.size()); }
	bool empty() const { return entries_.empty(); }
	std::size_t size() const { return entries_.size(); }
	std::vector<std::pair<unsigned, RecordEntry>> entries() const;

	/// Entries with n below this bound are the true minima; unset for partial runs.
	const std::optional<Exponent>& certified_up_to() const { return certified_up_to_; }
	void certify(const Exponent& bound) { certified_up_to_ = bound; }
	void clear_certification() { certified_up_to_.reset(); }

	friend bool operator==(const RecordTable&, const RecordTable&) = default;

private:
	friend RecordTable merge(const RecordTable&, const RecordTable&);

	Trit chi_;
	// index k - 1; rho is nondecreasing in k, so the table never has gaps
	std::vector<RecordEntry> entries_;
	std::optional<Exponent> certified_up_to_;
};

/// Pointwise minimum; throws std::invalid_argument on a chi mismatch. The merged
/// certification bound is the larger of the two.
RecordTable merge(const RecordTable& a, const RecordTable& b);

/// rho_1(k) = rho_2(k) + 1.
RecordTable derive_rho1(const RecordTable& table2);

/// Adds entries of `enumerated` whose exponent lies below the certification bound
/// of `generated`. Used to seed small k from exact expansions.
RecordTable cross_fill(const RecordTable& generated, const RecordTable& enumerated);

/// Mean number of fair three-sided die rolls until k consecutive non-chi outcomes.
double expected_rolls(unsigned k);

struct HeuristicRow {
	unsigned k = 1;
	Exponent rho;
	uint128 digit_len = 1;
	double expected_rolls = 0;
	double ratio = 0;
};

std::vector<HeuristicRow> heuristic_rows(const RecordTable& table);

/// chi,k,n,digit_length,expected_rolls,ratio
void write_csv(std::ostream& os, const RecordTable& table);
/// {"chi", "certified_up_to", "records": [{"k", "n", "digit_length"}]}
void write_json(std::ostream& os, const RecordTable& table);
RecordTable read_json(std::istream& is);

} // namespace ternpow
