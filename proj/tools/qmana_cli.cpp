#include <iostream>

#include "qmana/cli.hpp"

int main(int argc, char** argv) { return qmana::run_cli(argc, argv, std::cout, std::cerr); }
