#include <iostream>

#include "gorhom/cli.hpp"

int main(int argc, char** argv) { return gorhom::run_cli(argc, argv, std::cout, std::cerr); }
