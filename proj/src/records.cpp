#include "ternpow/records.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace ternpow {

namespace {

// Runs longer than this are only possible for a full-expansion digit avoider, where
// a record table is beside the point; it keeps a discovery from exhausting memory.
constexpr std::uint64_t kMaxTrackedRun = std::uint64_t{1} << 16;

std::string format_real(double x)
{
	char buf[32];
	std::snprintf(buf, sizeof(buf), "%.5e", x);
	return buf;
}

} // namespace

RecordTable::RecordTable(Trit chi) : chi_(checked_trit(chi)) {}

RecordTable RecordTable::from_entries(Trit chi, const std::map<unsigned, RecordEntry>& entries,
                                      std::optional<Exponent> certified_up_to)
{
	RecordTable t(chi);
	unsigned expected = 1;
	for (const auto& [k, e] : entries)
	{
		if (k != expected) throw std::invalid_argument("record table has a gap at k = " + std::to_string(expected));
		if (!t.entries_.empty() && e.n < t.entries_.back().n)
			throw std::invalid_argument("record exponents decrease at k = " + std::to_string(k));
		t.entries_.push_back(e);
		++expected;
	}
	t.certified_up_to_ = certified_up_to;
	return t;
}

void RecordTable::offer(const Exponent& j, std::uint64_t run, uint128 digit_length)
{
	run = std::min(run, kMaxTrackedRun);
	const std::size_t known = std::min<std::size_t>(run, entries_.size());
	if (run > entries_.size()) entries_.resize(run, RecordEntry{j, digit_length});
	// entries are nondecreasing in k: once one is already <= j, all below it are too
	for (std::size_t k = known; k-- > 0;)
	{
		if (entries_[k].n <= j) break;
		entries_[k] = RecordEntry{j, digit_length};
	}
}

std::optional<RecordEntry> RecordTable::at(unsigned k) const
{
	if (k < 1 || k > entries_.size()) return std::nullopt;
	return entries_[k - 1];
}

std::vector<std::pair<unsigned, RecordEntry>> RecordTable::entries() const
{
	std::vector<std::pair<unsigned, RecordEntry>> out;
	out.reserve(entries_.size());
	for (std::size_t i = 0; i < entries_.size(); ++i) out.emplace_back(static_cast<unsigned>(i + 1), entries_[i]);
	return out;
}

RecordTable merge(const RecordTable& a, const RecordTable& b)
{
	if (a.chi_ != b.chi_) throw std::invalid_argument("merge: record tables for different digits");
	const RecordTable& longer = a.entries_.size() >= b.entries_.size() ? a : b;
	const RecordTable& shorter = &longer == &a ? b : a;
	RecordTable r = longer;
	for (std::size_t i = 0; i < shorter.entries_.size(); ++i)
		if (shorter.entries_[i].n < r.entries_[i].n) r.entries_[i] = shorter.entries_[i];

	const auto& ca = a.certified_up_to_;
	const auto& cb = b.certified_up_to_;
	r.certified_up_to_ = !ca ? cb : !cb ? ca : std::max(*ca, *cb);
	return r;
}

RecordTable derive_rho1(const RecordTable& table2)
{
	if (table2.chi() != 2) throw std::invalid_argument("derive_rho1 needs the table for digit 2");
	std::map<unsigned, RecordEntry> shifted;
	for (const auto& [k, e] : table2.entries())
	{
		const Exponent n = e.n + 1;
		shifted.emplace(k, RecordEntry{n, digit_length(n)});
	}
	std::optional<Exponent> bound;
	if (table2.certified_up_to()) bound = *table2.certified_up_to() + 1;
	return RecordTable::from_entries(1, shifted, bound);
}

RecordTable cross_fill(const RecordTable& generated, const RecordTable& enumerated)
{
	if (!generated.certified_up_to()) return generated;
	const Exponent bound = *generated.certified_up_to();
	std::map<unsigned, RecordEntry> below;
	for (const auto& [k, e] : enumerated.entries())
	{
		if (!(e.n < bound)) break;
		below.emplace(k, e);
	}
	return merge(generated, RecordTable::from_entries(enumerated.chi(), below));
}

double expected_rolls(unsigned k)
{
	return 3.0 * std::pow(1.5, static_cast<double>(k)) - 3.0;
}

std::vector<HeuristicRow> heuristic_rows(const RecordTable& table)
{
	std::vector<HeuristicRow> rows;
	for (const auto& [k, e] : table.entries())
	{
		HeuristicRow row;
		row.k = k;
		row.rho = e.n;
		row.digit_len = e.digit_length;
		row.expected_rolls = expected_rolls(k);
		row.ratio = static_cast<double>(e.digit_length) / row.expected_rolls;
		rows.push_back(row);
	}
	return rows;
}

void write_csv(std::ostream& os, const RecordTable& table)
{
	os << "chi,k,n,digit_length,expected_rolls,ratio\n";
	for (const HeuristicRow& row : heuristic_rows(table))
	{
		os << unsigned(table.chi()) << ',' << row.k << ',' << row.rho.to_string() << ',' << to_string(row.digit_len)
		   << ',' << format_real(row.expected_rolls) << ',' << format_real(row.ratio) << '\n';
	}
}

void write_json(std::ostream& os, const RecordTable& table)
{
	using nlohmann::json;
	json records = json::array();
	for (const auto& [k, e] : table.entries())
	{
		json dl;
		if (e.digit_length <= std::numeric_limits<std::uint64_t>::max())
			dl = static_cast<std::uint64_t>(e.digit_length);
		else
			dl = to_string(e.digit_length);
		records.push_back({{"k", k}, {"n", e.n.to_string()}, {"digit_length", dl}});
	}
	json doc;
	doc["chi"] = unsigned(table.chi());
	doc["certified_up_to"] = table.certified_up_to() ? json(table.certified_up_to()->to_string()) : json(nullptr);
	doc["records"] = std::move(records);
	os << doc.dump(2) << '\n';
}

RecordTable read_json(std::istream& is)
{
	using nlohmann::json;
	const json doc = json::parse(is);
	const Trit chi = checked_trit(doc.at("chi").get<unsigned>());
	std::optional<Exponent> bound;
	if (!doc.at("certified_up_to").is_null()) bound = Exponent::parse(doc.at("certified_up_to").get<std::string>());

	std::map<unsigned, RecordEntry> entries;
	for (const json& r : doc.at("records"))
	{
		const json& dl = r.at("digit_length");
		const uint128 len = dl.is_string() ? parse_uint128(dl.get<std::string>()) : uint128(dl.get<std::uint64_t>());
		entries.emplace(r.at("k").get<unsigned>(), RecordEntry{Exponent::parse(r.at("n").get<std::string>()), len});
	}
	return RecordTable::from_entries(chi, entries, bound);
}

} // namespace ternpow
