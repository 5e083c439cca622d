#include <iostream>

#include "orbitclass/cli.hpp"

int main(int argc, char** argv) { return orbitclass::run_cli(argc, argv, std::cout, std::cerr); }
