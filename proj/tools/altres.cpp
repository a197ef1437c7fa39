#include "altres/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return altres::run_cli(argc, argv, std::cout, std::cerr); }
