#pragma once

// Differential checks of the fast path against the brute-force oracle, plus the
// digit identities, runnable from the command line in a few seconds.

#include <iosfwd>
#include <string>
#include <vector>

namespace ternpow::selftest {

struct CheckResult {
	std::string name;
	bool passed = false;
	std::string detail;
};

struct Report {
	std::vector<CheckResult> checks;

	bool passed() const;
	/// nullptr when everything passed.
	const CheckResult* first_failure() const;
};

/// Runs every check, writing one line per check to `log` if given.
Report run(std::ostream* log = nullptr);

} // namespace ternpow::selftest
