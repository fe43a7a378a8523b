#include <iostream>

#include "bjsm_tools/cli.hpp"

int main(int argc, char** argv) { return bjsm::tools::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
