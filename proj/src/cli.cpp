#include "ternpow/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ternpow/generator.hpp"
#include "ternpow/lemma.hpp"
#include "ternpow/oracle.hpp"
#include "ternpow/records.hpp"
#include "ternpow/scanner.hpp"
#include "ternpow/selftest.hpp"

namespace ternpow::cli {

namespace {

// Exponents up to this bound are cross-filled from exact expansions.
constexpr std::uint64_t kCrossFillLimit = 64;
// Counterexamples shorter than this get their expansion printed.
constexpr unsigned kPrintExpansionLimit = 120;

unsigned default_workers()
{
	if (const char* env = std::getenv(kWorkersEnv))
	{
		try
		{
			const unsigned long n = std::stoul(env);
			if (n >= 1) return static_cast<unsigned>(n);
		}
		catch (const std::exception&)
		{
		}
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

std::string join(const std::vector<std::uint64_t>& xs)
{
	if (xs.empty()) return "none";
	std::ostringstream ss;
	for (std::size_t i = 0; i < xs.size(); ++i) ss << (i ? ", " : "") << xs[i];
	return ss.str();
}

std::string expansion(const Exponent& j)
{
	const auto len = static_cast<unsigned>(digit_length(j));
	const std::string digits = pow2_mod_pow3(j, len).to_digit_string();
	return "(" + digits.substr(digits.size() - len) + ")_3";
}

void write_table(const RecordTable& table, const std::string& format, std::ostream& os)
{
	if (format == "json")
		write_json(os, table);
	else
		write_csv(os, table);
}

void write_table_file(const RecordTable& table, const std::string& format, const std::string& path)
{
	std::ofstream f(path, std::ios::binary);
	if (!f) throw std::runtime_error("cannot open " + path + " for writing");
	write_table(table, format, f);
	if (!f) throw std::runtime_error("failed writing " + path);
}

struct GeneratorOptions {
	unsigned chi = 2;
	unsigned depth = 1;
	unsigned kappa = 54;
	unsigned workers = 1;
	unsigned split_depth = 12;
	bool progress = false;
};

void add_generator_options(CLI::App* cmd, GeneratorOptions& opt)
{
	cmd->add_option("--depth,-K", opt.depth, "Maximum recursion depth K (number of trailing digits)")
		->required()
		->check(CLI::Range(1u, kMaxDepth));
	cmd->add_option("--kappa", opt.kappa, "Fixed precision in ternary digits (multiple of 18)")->capture_default_str();
	cmd->add_option("--workers,-j", opt.workers, std::string("Worker threads (default: cores, or $") + kWorkersEnv + ")")
		->capture_default_str()
		->check(CLI::PositiveNumber);
	cmd->add_option("--split-depth", opt.split_depth, "Depth at which subtrees are handed to workers")
		->capture_default_str()
		->check(CLI::PositiveNumber);
	cmd->add_flag("--progress", opt.progress, "Report progress on stderr");
}

GenOutcome run_generator(const GeneratorOptions& opt, Trit chi, bool trivial_filter, std::ostream& err)
{
	GenConfig cfg;
	cfg.chi = chi;
	cfg.depth = opt.depth;
	cfg.kappa = opt.kappa;
	cfg.trivial_filter = trivial_filter;
	cfg.split_depth = opt.split_depth;
	cfg.worker_count = opt.workers;

	RunHooks hooks;
	std::mutex m;
	auto last = std::chrono::steady_clock::now();
	const double estimate = static_cast<double>(node_count_estimate(opt.depth, chi));
	if (opt.progress)
	{
		hooks.on_progress = [&](std::uint64_t nodes, std::size_t done, std::size_t total) {
			std::lock_guard lock(m);
			const auto now = std::chrono::steady_clock::now();
			if (done != total && now - last < std::chrono::seconds(1)) return;
			last = now;
			err << "progress: " << done << "/" << total << " subtrees, " << nodes << " nodes (" << std::fixed
			    << std::setprecision(1) << 100.0 * static_cast<double>(nodes) / estimate << "%)\n"
			    << std::defaultfloat;
		};
	}
	GenOutcome outcome = run(cfg, hooks);
	for (const std::string& w : outcome.warnings) err << "warning: " << w << '\n';
	return outcome;
}

int cmd_verify(const GeneratorOptions& opt, bool no_trivial_filter, const std::string& record_out,
               const std::string& format, std::ostream& out, std::ostream& err)
{
	const auto t0 = std::chrono::steady_clock::now();
	const GenOutcome o = run_generator(opt, static_cast<Trit>(opt.chi), !no_trivial_filter, err);
	const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

	bool nontrivial = false;
	std::vector<std::uint64_t> listed;
	for (const Exponent& e : o.counterexamples)
	{
		nontrivial = nontrivial || e > Exponent(kTrivialExponentLimit);
		listed.push_back(e.to_u64());
	}

	out << "chi: " << opt.chi << '\n'
	    << "depth: " << opt.depth << '\n'
	    << "kappa: " << o.kappa << '\n'
	    << "workers: " << opt.workers << '\n'
	    << "trivial_filter: " << (no_trivial_filter ? "off" : "on") << '\n'
	    << "nodes_visited: " << o.nodes_visited << '\n'
	    << "expected_nodes: " << to_string(node_count_estimate(opt.depth, static_cast<Trit>(opt.chi))) << '\n'
	    << "certified_up_to: " << o.records.certified_up_to()->to_string() << '\n'
	    << "counterexamples: " << join(listed) << '\n';
	for (const Exponent& e : o.counterexamples)
		if (digit_length(e) <= kPrintExpansionLimit) out << "  2^" << e.to_string() << " = " << expansion(e) << '\n';
	out << "wall_time_s: " << std::fixed << std::setprecision(3) << seconds << std::defaultfloat << '\n';

	if (!record_out.empty()) write_table_file(o.records, format, record_out);
	if (nontrivial)
	{
		err << "NONTRIVIAL COUNTEREXAMPLE FOUND\n";
		return kCounterexample;
	}
	return kClean;
}

int cmd_records(const GeneratorOptions& opt, const std::string& path, const std::string& format, std::ostream& out,
                std::ostream& err)
{
	const Trit chi = static_cast<Trit>(opt.chi);
	const Trit run_chi = chi == 1 ? Trit{2} : chi;
	const GenOutcome o = run_generator(opt, run_chi, true, err);

	const std::uint64_t small = std::min<std::uint64_t>(kCrossFillLimit, unit_exponent(opt.depth).to_u64() - 1);
	const oracle::OracleReport exact = oracle::sweep(small);
	RecordTable table = cross_fill(o.records, exact.record_tables[run_chi]);
	if (chi == 1) table = cross_fill(derive_rho1(table), exact.record_tables[1]);

	if (path.empty())
	{
		write_table(table, format, out);
		return kClean;
	}
	write_table_file(table, format, path);
	out << "chi: " << opt.chi << '\n'
	    << "depth: " << opt.depth << '\n'
	    << "records: " << table.size() << '\n'
	    << "certified_up_to: " << table.certified_up_to()->to_string() << '\n'
	    << "written: " << path << '\n';
	return kClean;
}

int cmd_heuristic(unsigned max_k, std::ostream& out)
{
	out << "k,expected_rolls\n";
	char buf[64];
	for (unsigned k = 1; k <= max_k; ++k)
	{
		std::snprintf(buf, sizeof(buf), "%u,%.5e\n", k, expected_rolls(k));
		out << buf;
	}
	return kClean;
}

int cmd_oracle(std::uint64_t max_exponent, const std::string& out_dir, const std::string& format, std::ostream& out)
{
	const oracle::OracleReport report = oracle::sweep(max_exponent);
	out << "max_exponent: " << max_exponent << '\n'
	    << "no_digit_2: " << join(report.counterexamples_erdos) << '\n'
	    << "no_digit_0: " << join(report.counterexamples_sloane) << '\n'
	    << "no_digit_1: " << join(report.counterexamples_ones) << '\n';

	std::vector<std::uint64_t> nontrivial;
	for (Trit chi = 0; chi < 3; ++chi)
	{
		const auto& known = oracle::known_exceptions(chi);
		for (const std::uint64_t n : report.avoiders(chi))
			if (std::find(known.begin(), known.end(), n) == known.end()) nontrivial.push_back(n);
	}
	out << "nontrivial: " << join(nontrivial) << '\n';

	if (!out_dir.empty())
	{
		std::filesystem::create_directories(out_dir);
		for (Trit chi = 0; chi < 3; ++chi)
		{
			const std::string path =
				(std::filesystem::path(out_dir) / ("oracle_chi" + std::to_string(chi) + "." + format)).string();
			write_table_file(report.record_tables[chi], format, path);
			out << "written: " << path << '\n';
		}
	}
	return nontrivial.empty() ? kClean : kCounterexample;
}

int cmd_selftest(std::ostream& out, std::ostream& err)
{
	const selftest::Report report = selftest::run(&out);
	if (const selftest::CheckResult* f = report.first_failure())
	{
		err << "selftest failed: " << f->name << " (" << f->detail << ")\n";
		return kError;
	}
	out << "selftest: all " << report.checks.size() << " checks passed\n";
	return kClean;
}

} // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Search powers of two for ternary digit patterns"};
	app.name(args.empty() ? "ternpow" : args.front());
	app.require_subcommand(1);

	GeneratorOptions gen;
	gen.workers = default_workers();

	bool no_trivial_filter = false;
	std::string record_out, format = "csv";
	auto* verify = app.add_subcommand("verify", "Enumerate exponents below u_K and check them for counterexamples");
	verify->add_option("--chi", gen.chi, "Forbidden digit (0 or 2)")->required()->check(CLI::IsMember({0u, 2u}));
	add_generator_options(verify, gen);
	verify->add_flag("--no-trivial-filter", no_trivial_filter, "Also report the small exceptions (j <= 16)");
	verify->add_option("--record-out", record_out, "Write the record table to this file");
	verify->add_option("--format", format, "Record table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

	std::string records_out;
	auto* records = app.add_subcommand("records", "Compute rho_chi(k) record breakers with heuristic columns");
	records->add_option("--chi", gen.chi, "Digit (0, 1 or 2)")->required()->check(CLI::IsMember({0u, 1u, 2u}));
	add_generator_options(records, gen);
	records->add_option("--out,-o", records_out, "Output file (default: standard output)");
	records->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

	unsigned max_k = 100;
	auto* heuristic = app.add_subcommand("heuristic", "Print expected die rolls 3 (3/2)^k - 3");
	heuristic->add_option("--max-k", max_k, "Largest k")->capture_default_str();

	std::uint64_t max_exponent = 20000;
	std::string out_dir;
	auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force sweep over exact expansions of 2^n");
	oracle_cmd->add_option("--max-exponent,-N", max_exponent, "Largest exponent swept")->capture_default_str();
	oracle_cmd->add_option("--out-dir", out_dir, "Write per-digit record tables here");
	oracle_cmd->add_option("--format", format, "Record table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

	auto* selftest_cmd = app.add_subcommand("selftest", "Run the differential self-checks");

	std::vector<const char*> argv;
	for (const std::string& a : args) argv.push_back(a.c_str());
	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (const CLI::ParseError& e)
	{
		const int code = app.exit(e, out, err);
		return code == 0 ? kClean : kError;
	}

	try
	{
		if (*verify) return cmd_verify(gen, no_trivial_filter, record_out, format, out, err);
		if (*records) return cmd_records(gen, records_out, format, out, err);
		if (*heuristic) return cmd_heuristic(max_k, out);
		if (*oracle_cmd) return cmd_oracle(max_exponent, out_dir, format, out);
		if (*selftest_cmd) return cmd_selftest(out, err);
	}
	catch (const std::exception& e)
	{
		err << "error: " << e.what() << '\n';
		return kError;
	}
	return kError;
}

} // namespace ternpow::cli
