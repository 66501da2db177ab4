#include <iostream>

#include "cyclefact/cli.hpp"

int main(int argc, char** argv) { return cyclefact::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
