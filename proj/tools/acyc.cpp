#include "acyc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return acyc::run_cli(argc, argv, std::cout, std::cerr); }
