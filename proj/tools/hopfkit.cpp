#include "hopfkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hopfkit::cli::main(argc, argv, std::cout, std::cerr); }
