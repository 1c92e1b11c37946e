#include <iostream>

#include "bvf/cli.hpp"

int main(int argc, char** argv) { return bvf::run_cli(argc, argv, std::cout, std::cerr); }
