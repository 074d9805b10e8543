#include "dq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dq::run_cli(argc, argv, std::cout, std::cerr); }
