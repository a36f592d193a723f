#include <iostream>

#include "mced/cli.hpp"

int main(int argc, char **argv)
{
	return mced::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
