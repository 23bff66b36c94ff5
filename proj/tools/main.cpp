#include <iostream>

#include "padicw1/cli.hpp"

int main(int argc, char** argv) { return padicw1::run_cli(argc, argv, std::cout, std::cerr); }
