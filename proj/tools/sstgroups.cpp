#include <iostream>

#include "sst/cli.hpp"

int main(int argc, char** argv) { return sst::cli_main(argc, argv, std::cout, std::cerr); }
