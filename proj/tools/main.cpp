#include <iostream>

#include "bogo/cli/cli.hpp"

int main(int argc, char** argv) { return bogo::cli::run(argc, argv, std::cout, std::cerr); }
