#include <iostream>

#include "pqblocks/cli.hpp"

int main(int argc, char** argv) { return pqblocks::run_cli(argc, argv, std::cout, std::cerr); }
