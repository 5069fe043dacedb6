#include <iostream>

#include "hallwc/cli.hpp"

int main(int argc, char** argv) { return hallwc::run_cli(argc, argv, std::cout, std::cerr); }
