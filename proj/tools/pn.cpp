#include "pn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pn::run_cli(argc, argv, std::cout, std::cerr); }
