#include <iostream>
#include <string>
#include <vector>

#include "ternpow/cli.hpp"

int main(int argc, char* argv[])
{
	const std::vector<std::string> args(argv, argv + argc);
	return ternpow::cli::main(args, std::cout, std::cerr);
}
