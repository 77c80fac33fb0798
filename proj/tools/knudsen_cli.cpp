#include "knudsen/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return knudsen::cli::run(argc, argv, std::cout, std::cerr); }
