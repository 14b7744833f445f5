#include <iostream>

#include "symm/cli/cli.hpp"

int main(int argc, char** argv) { return symm::cli::cli_main(argc, argv, std::cout, std::cerr); }
