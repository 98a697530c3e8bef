#include <iostream>

#include "pmtower/cli/commands.hpp"

int main(int argc, char** argv) { return pmtower::cli::run(argc, argv, std::cout, std::cerr); }
