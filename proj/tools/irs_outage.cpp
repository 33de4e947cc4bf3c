#include <iostream>

#include "irs/cli/commands.hpp"

int main(int argc, char** argv) { return irs::cli::run(argc, argv, std::cout, std::cerr); }
