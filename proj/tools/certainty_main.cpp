#include <iostream>

#include "certainty/cli.hpp"

int main(int argc, char** argv) { return certainty::cli::main(argc, argv, std::cout, std::cerr); }
