#include "polykernel_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return polykernel::cli::run_cli(argc, argv, std::cout, std::cerr);
}
