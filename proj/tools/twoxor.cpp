#include <iostream>

#include "twoxor/cli.hpp"

int main(int argc, char** argv) { return twoxor::run_cli(argc, argv, std::cout, std::cerr); }
