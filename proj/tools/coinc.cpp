#include <iostream>

#include "coinc/cli.hpp"

int main(int argc, char** argv) { return coinc::run_cli(argc, argv, std::cout, std::cerr); }
