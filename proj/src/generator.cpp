#include "ternpow/generator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace ternpow {

namespace {

unsigned round_up_to_limb(unsigned digits)
{
	return static_cast<unsigned>(limbs_for_digits(digits)) * TritWord::kDigitsPerLimb;
}

// Per-worker traversal state. Nothing in here is shared.
class Walker {
public:
	Walker(const GenConfig& config, const std::vector<Unit>& ladder, const NodeObserver* observer)
		: config_(config), ladder_(ladder), observer_(observer), records_(config.chi)
	{
		if (config_.count_per_depth)
		{
			visited_.assign(config_.depth, 0);
			survivors_.assign(config_.depth, 0);
		}
	}

	// Visits `node` and its subtree. With a frontier, children landing on
	// split_depth are queued there instead of being visited.
	void visit(const GenNode& node, std::vector<GenNode>* frontier = nullptr, unsigned split_depth = 0)
	{
		++nodes_;
		const unsigned k = node.k;
		const ScanResult s = scan(node.j, node.pow_j, config_.chi);
		records_.offer(node.j, s);
		if (s.absent() && (!config_.trivial_filter || node.j > Exponent(kTrivialExponentLimit)))
			counterexamples_.push_back(node.j);

		const bool survives = node.pow_j.digit_unchecked(k) != config_.chi;
		if (config_.count_per_depth)
		{
			++visited_[k - 1];
			if (survives) ++survivors_[k - 1];
		}
		if (observer_ != nullptr && *observer_) (*observer_)(node, s);
		if (!survives || k >= config_.depth) return;

		const Unit& unit = ladder_[k - 1];
		GenNode child{k + 1, node.j, node.pow_j};
		for (int i = 0; i < 3; ++i)
		{
			if (i > 0)
			{
				child.j = child.j + unit.u;
				child.pow_j = trit_mul_mod(child.pow_j, unit.pow);
			}
			if (frontier != nullptr && child.k == split_depth)
				frontier->push_back(child);
			else
				visit(child, frontier, split_depth);
		}
	}

	void fold_into(GenOutcome& out) const
	{
		out.nodes_visited += nodes_;
		for (std::size_t i = 0; i < visited_.size(); ++i)
		{
			out.visited_at_depth[i] += visited_[i];
			out.survivors_at_depth[i] += survivors_[i];
		}
		out.counterexamples.insert(out.counterexamples.end(), counterexamples_.begin(), counterexamples_.end());
		out.records = merge(out.records, records_);
	}

	std::uint64_t nodes() const { return nodes_; }

private:
	const GenConfig& config_;
	const std::vector<Unit>& ladder_;
	const NodeObserver* observer_;
	std::uint64_t nodes_ = 0;
	std::vector<std::uint64_t> visited_, survivors_;
	std::vector<Exponent> counterexamples_;
	RecordTable records_;
};

} // namespace

void validate(const GenConfig& config)
{
	if (config.chi != 0 && config.chi != 2) throw std::invalid_argument("chi must be 0 or 2 (rho_1 is derived from chi = 2)");
	if (config.depth < 1 || config.depth > kMaxDepth)
		throw std::invalid_argument("depth must be in [1, " + std::to_string(kMaxDepth) + "]");
	if (config.kappa < TritWord::kDigitsPerLimb || config.kappa % TritWord::kDigitsPerLimb != 0)
		throw std::invalid_argument("kappa must be a positive multiple of 18");
	if (config.split_depth < 1) throw std::invalid_argument("split depth must be at least 1");
	if (config.worker_count < 1) throw std::invalid_argument("worker count must be at least 1");
}

unsigned effective_kappa(const GenConfig& config)
{
	return std::max(config.kappa, round_up_to_limb(config.depth));
}

std::vector<GenNode> base_nodes(Trit chi, unsigned kappa)
{
	std::vector<GenNode> nodes;
	nodes.push_back(GenNode{1, 0, trit_from_integer(1, kappa)});
	if (chi == 0)
		nodes.push_back(GenNode{1, 1, trit_from_integer(2, kappa)});
	else if (chi != 2)
		throw std::invalid_argument("base_nodes: chi must be 0 or 2");
	return nodes;
}

std::vector<GenNode> expand(const GenNode& node, const Unit& unit, Trit chi, unsigned max_depth)
{
	if (unit.k != node.k) throw std::invalid_argument("expand: unit does not match node depth");
	if (node.k > node.pow_j.kappa()) throw std::invalid_argument("expand: depth exceeds residue precision");
	std::vector<GenNode> children;
	if (node.pow_j.digit_unchecked(node.k) == chi || node.k >= max_depth) return children;

	const TritWord once = trit_mul_mod(node.pow_j, unit.pow);
	children.push_back(GenNode{node.k + 1, node.j, node.pow_j});
	children.push_back(GenNode{node.k + 1, node.j + unit.u, once});
	children.push_back(GenNode{node.k + 1, node.j + unit.u * 2, trit_mul_mod(once, unit.pow)});
	return children;
}

uint128 node_count_estimate(unsigned depth, Trit chi)
{
	if (depth == 0) return 0;
	if (depth > 120) throw std::invalid_argument("node_count_estimate: depth too large");
	const uint128 base = chi == 0 ? 2 : 1;
	return base * (1 + 3 * ((uint128{1} << (depth - 1)) - 1));
}

GenOutcome run(const GenConfig& config, const RunHooks& hooks)
{
	validate(config);

	GenOutcome out;
	out.kappa = effective_kappa(config);
	if (out.kappa != config.kappa)
		out.warnings.push_back("kappa " + std::to_string(config.kappa) + " is below depth " + std::to_string(config.depth) +
		                       "; using kappa " + std::to_string(out.kappa));
	out.records = RecordTable(config.chi);
	if (config.count_per_depth)
	{
		out.visited_at_depth.assign(config.depth, 0);
		out.survivors_at_depth.assign(config.depth, 0);
	}

	const std::vector<Unit> ladder = unit_ladder(config.depth, out.kappa);
	const NodeObserver* observer = hooks.on_visit ? &hooks.on_visit : nullptr;
	const unsigned split = std::min(config.split_depth, config.depth);

	// Shallow part of the tree, sequentially, collecting the subtree roots.
	std::vector<GenNode> tasks;
	{
		Walker shallow(config, ladder, observer);
		for (const GenNode& root : base_nodes(config.chi, out.kappa))
		{
			if (split == 1)
				tasks.push_back(root);
			else
				shallow.visit(root, &tasks, split);
		}
		shallow.fold_into(out);
	}

	std::atomic<std::size_t> next{0}, done{0};
	std::atomic<std::uint64_t> nodes_so_far{out.nodes_visited};
	std::atomic<bool> abort{false};
	std::mutex failure_mutex;
	std::exception_ptr failure;

	const auto work = [&](Walker& walker) {
		try
		{
			for (std::size_t t; !abort.load(std::memory_order_relaxed) && (t = next.fetch_add(1)) < tasks.size();)
			{
				const std::uint64_t before = walker.nodes();
				walker.visit(tasks[t]);
				const std::uint64_t total = nodes_so_far.fetch_add(walker.nodes() - before) + (walker.nodes() - before);
				const std::size_t finished = done.fetch_add(1) + 1;
				if (hooks.on_progress) hooks.on_progress(total, finished, tasks.size());
			}
		}
		catch (...)
		{
			std::lock_guard lock(failure_mutex);
			if (!failure) failure = std::current_exception();
			abort = true;
		}
	};

	const std::size_t thread_count = std::min<std::size_t>(config.worker_count, std::max<std::size_t>(tasks.size(), 1));
	std::vector<Walker> walkers;
	walkers.reserve(thread_count);
	for (std::size_t i = 0; i < thread_count; ++i) walkers.emplace_back(config, ladder, observer);

	if (thread_count == 1)
		work(walkers.front());
	else
	{
		std::vector<std::jthread> threads;
		threads.reserve(thread_count);
		for (Walker& w : walkers) threads.emplace_back([&work, &w] { work(w); });
	}

	for (const Walker& w : walkers) w.fold_into(out);
	std::sort(out.counterexamples.begin(), out.counterexamples.end());
	out.counterexamples.erase(std::unique(out.counterexamples.begin(), out.counterexamples.end()), out.counterexamples.end());

	if (failure)
	{
		std::string what = "worker failed";
		try { std::rethrow_exception(failure); }
		catch (const std::exception& e) { what += ": " + std::string(e.what()); }
		catch (...) {}
		out.complete = false;
		throw GeneratorFailure(what, std::move(out));
	}

	out.complete = true;
	out.records.certify(ladder.back().u);
	return out;
}

} // namespace ternpow
