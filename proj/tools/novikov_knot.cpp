#include "nk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return nk::run_cli(argc, argv, std::cout, std::cerr); }
