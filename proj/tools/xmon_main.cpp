#include <iostream>

#include "xmon/cli.hpp"

int main(int argc, char** argv) { return xmon::run_cli(argc, argv, std::cout, std::cerr); }
