#include <iostream>

#include "ebnoise/cli.hpp"

int main(int argc, char** argv) { return ebnoise::run_cli(argc, argv, std::cout, std::cerr); }
