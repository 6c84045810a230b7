#include <iostream>

#include "dentedhex/cli.hpp"

int main(int argc, char** argv) { return dentedhex::run_cli(argc, argv, std::cout, std::cerr); }
