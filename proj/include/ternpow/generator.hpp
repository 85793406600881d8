#pragma once

// Depth-first construction of the exponents j < u_k whose trailing k ternary
// digits of 2^j avoid a digit chi.
//
// A node (k, j) carries 2^j mod 3^kappa. Every visited node is scanned for chi
// over the whole expansion of 2^j; a node whose k-th digit equals chi is a leaf,
// otherwise (below the depth cap) it spawns j, j + u_k and j + 2 u_k at depth
// k + 1. Those three children agree with 2^j in the last k digits and take all
// three values in digit k + 1, so exactly one of them is pruned on its visit.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternpow/lemma.hpp"
#include "ternpow/records.hpp"
#include "ternpow/scanner.hpp"
#include "ternpow/ternary_core.hpp"

namespace ternpow {

/// Counterexamples at or below this exponent are the known small exceptions.
inline constexpr std::uint64_t kTrivialExponentLimit = 16;
inline constexpr unsigned kMaxDepth = 80; // u_80 < 2^127

struct GenConfig {
	Trit chi = 2;          // 0 or 2
	unsigned depth = 1;    // K
	unsigned kappa = 54;   // multiple of 18; raised to cover K if smaller
	bool trivial_filter = true;
	unsigned split_depth = 12;
	unsigned worker_count = 1;
	bool count_per_depth = false;
};

struct GenNode {
	unsigned k = 1;
	Exponent j;
	TritWord pow_j;
};

struct GenOutcome {
	std::uint64_t nodes_visited = 0;
	/// Index k - 1; filled only with GenConfig::count_per_depth.
	std::vector<std::uint64_t> visited_at_depth;
	std::vector<std::uint64_t> survivors_at_depth;
	/// Sorted, without repeats (a j is revisited at every depth it survives to).
	std::vector<Exponent> counterexamples;
	RecordTable records;
	bool complete = false;
	unsigned kappa = 54;
	std::vector<std::string> warnings;
};

/// Thrown by run() when a worker fails; carries what the other workers finished.
class GeneratorFailure : public std::runtime_error {
public:
	GeneratorFailure(const std::string& what, GenOutcome partial)
		: std::runtime_error(what), partial_(std::move(partial)) {}
	const GenOutcome& partial() const { return partial_; }

private:
	GenOutcome partial_;
};

/// Called for every visited node, from worker threads when worker_count > 1.
using NodeObserver = std::function<void(const GenNode&, const ScanResult&)>;
/// Called after each finished subtree task, from worker threads.
using ProgressCallback = std::function<void(std::uint64_t nodes_so_far, std::size_t tasks_done, std::size_t tasks_total)>;

struct RunHooks {
	NodeObserver on_visit;
	ProgressCallback on_progress;
};

/// Throws std::invalid_argument for an unusable configuration.
void validate(const GenConfig& config);

/// kappa actually used: the configured value raised to a multiple of 18 >= K.
unsigned effective_kappa(const GenConfig& config);

/// Depth-1 roots: (1, 0, 1) for chi = 2; (1, 0, 1) and (1, 1, 2) for chi = 0.
std::vector<GenNode> base_nodes(Trit chi, unsigned kappa = 54);

/// Children of a node, or nothing if d_k(2^j) == chi or k >= max_depth.
/// `unit` must be the unit for the node's depth.
std::vector<GenNode> expand(const GenNode& node, const Unit& unit, Trit chi, unsigned max_depth);

/// Visited-node count for depth cap K: every survivor has exactly two surviving
/// children, so the count is b (1 + 3 (2^(K-1) - 1)) with b base nodes.
uint128 node_count_estimate(unsigned depth, Trit chi);

GenOutcome run(const GenConfig& config, const RunHooks& hooks = {});

} // namespace ternpow
