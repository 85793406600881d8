#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ternpow/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
	int code = -1;
	std::string out, err;
};

Result call(std::vector<std::string> args)
{
	args.insert(args.begin(), "ternpow");
	std::ostringstream out, err;
	Result r;
	r.code = ternpow::cli::main(args, out, err);
	r.out = out.str();
	r.err = err.str();
	return r;
}

bool has_line(const std::string& text, const std::string& line)
{
	std::istringstream is(text);
	for (std::string l; std::getline(is, l);)
		if (l == line) return true;
	return false;
}

std::string slurp(const fs::path& p)
{
	std::ifstream f(p, std::ios::binary);
	return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir(const std::string& name)
{
	const fs::path p = fs::temp_directory_path() / ("ternpow_cli_" + name);
	fs::remove_all(p);
	fs::create_directories(p);
	return p;
}

} // namespace

TEST_SUITE("cli")
{
	TEST_CASE("verify lists the small exceptions")
	{
		const Result r2 = call({"verify", "--chi", "2", "--depth", "12", "--no-trivial-filter", "-j", "2"});
		CHECK(r2.code == ternpow::cli::kClean);
		CHECK(has_line(r2.out, "counterexamples: 0, 2, 8"));
		CHECK(has_line(r2.out, "  2^8 = (100111)_3"));
		CHECK(has_line(r2.out, "trivial_filter: off"));
		CHECK(has_line(r2.out, "certified_up_to: 354294"));

		const Result r0 = call({"verify", "--chi", "0", "--depth", "12", "--no-trivial-filter"});
		CHECK(r0.code == ternpow::cli::kClean);
		CHECK(has_line(r0.out, "counterexamples: 0, 1, 2, 3, 4, 15"));

		const Result filtered = call({"verify", "--chi", "2", "-K", "10"});
		CHECK(filtered.code == ternpow::cli::kClean);
		CHECK(has_line(filtered.out, "counterexamples: none"));
		CHECK(has_line(filtered.out, "nodes_visited: 1534"));
		CHECK(has_line(filtered.out, "expected_nodes: 1534"));
	}

	TEST_CASE("argument errors exit with 1")
	{
		CHECK(call({}).code == ternpow::cli::kError);
		CHECK(call({"verify", "--chi", "1", "--depth", "5"}).code == ternpow::cli::kError);
		CHECK(call({"verify", "--chi", "2"}).code == ternpow::cli::kError);
		CHECK(call({"verify", "--chi", "2", "--depth", "81"}).code == ternpow::cli::kError);
		CHECK(call({"verify", "--chi", "2", "--depth", "5", "--kappa", "20"}).code == ternpow::cli::kError);
		CHECK(call({"bogus"}).code == ternpow::cli::kError);
		CHECK(call({"--help"}).code == ternpow::cli::kClean);
	}

	TEST_CASE("records for digit 1 are shifted digit 2 records")
	{
		const Result r2 = call({"records", "--chi", "2", "--depth", "12"});
		const Result r1 = call({"records", "--chi", "1", "--depth", "12"});
		REQUIRE(r2.code == 0);
		REQUIRE(r1.code == 0);
		std::istringstream a(r2.out), b(r1.out);
		std::string la, lb;
		std::getline(a, la);
		std::getline(b, lb);
		CHECK(la == "chi,k,n,digit_length,expected_rolls,ratio");
		int rows = 0;
		while (std::getline(a, la) && std::getline(b, lb))
		{
			const auto field = [](const std::string& line, int i) {
				std::istringstream s(line);
				std::string f;
				for (int c = 0; c <= i; ++c) std::getline(s, f, ',');
				return f;
			};
			REQUIRE(field(la, 1) == field(lb, 1));
			REQUIRE(std::stoull(field(la, 2)) + 1 == std::stoull(field(lb, 2)));
			++rows;
		}
		CHECK(rows > 10);
	}

	TEST_CASE("records at depth 1")
	{
		const Result r = call({"records", "--chi", "2", "--depth", "1"});
		CHECK(r.code == 0);
		CHECK(r.out == "chi,k,n,digit_length,expected_rolls,ratio\n2,1,0,1,1.50000e+00,6.66667e-01\n");
	}

	TEST_CASE("record files are identical across worker counts")
	{
		const fs::path dir = scratch_dir("records");
		for (const std::string fmt : {"csv", "json"})
		{
			const auto a = dir / ("a." + fmt), b = dir / ("b." + fmt);
			CHECK(call({"records", "--chi", "0", "-K", "14", "-j", "1", "--format", fmt, "-o", a.string()}).code == 0);
			CHECK(call({"records", "--chi", "0", "-K", "14", "-j", "4", "--split-depth", "3", "--format", fmt, "-o", b.string()})
			          .code == 0);
			CHECK(slurp(a) == slurp(b));
			if (fmt == "json")
			{
				const auto doc = nlohmann::json::parse(slurp(a));
				CHECK(doc["chi"] == 0);
				CHECK(doc["records"][3]["n"] == "10");
			}
		}
		fs::remove_all(dir);
	}

	TEST_CASE("heuristic")
	{
		CHECK(call({"heuristic", "--max-k", "0"}).out == "k,expected_rolls\n");
		const Result r = call({"heuristic", "--max-k", "2"});
		CHECK(r.out == "k,expected_rolls\n1,1.50000e+00\n2,3.75000e+00\n");
		CHECK(has_line(call({"heuristic"}).out, "98,5.42082e+17"));
	}

	TEST_CASE("oracle")
	{
		const Result r = call({"oracle", "-N", "16"});
		CHECK(r.code == 0);
		CHECK(has_line(r.out, "no_digit_2: 0, 2, 8"));
		CHECK(has_line(r.out, "no_digit_0: 0, 1, 2, 3, 4, 15"));
		CHECK(has_line(r.out, "no_digit_1: 1, 3, 9"));
		CHECK(has_line(r.out, "nontrivial: none"));

		const Result zero = call({"oracle", "-N", "0"});
		CHECK(zero.code == 0);
		CHECK(has_line(zero.out, "no_digit_2: 0"));
		CHECK(has_line(zero.out, "no_digit_1: none"));

		CHECK(call({"oracle", "-N", "200000"}).code == ternpow::cli::kError);

		const fs::path dir = scratch_dir("oracle");
		CHECK(call({"oracle", "-N", "100", "--out-dir", dir.string(), "--format", "json"}).code == 0);
		for (int chi = 0; chi < 3; ++chi)
		{
			const auto doc = nlohmann::json::parse(slurp(dir / ("oracle_chi" + std::to_string(chi) + ".json")));
			CHECK(doc["certified_up_to"] == "101");
		}
		fs::remove_all(dir);
	}

	TEST_CASE("worker count from the environment")
	{
		::setenv(ternpow::cli::kWorkersEnv, "3", 1);
		CHECK(has_line(call({"verify", "--chi", "2", "-K", "6"}).out, "workers: 3"));
		CHECK(has_line(call({"verify", "--chi", "2", "-K", "6", "-j", "2"}).out, "workers: 2"));
		::unsetenv(ternpow::cli::kWorkersEnv);
	}

	TEST_CASE("selftest")
	{
		const Result r = call({"selftest"});
		CHECK(r.code == 0);
		CHECK(r.out.find("checks passed") != std::string::npos);
	}
}
