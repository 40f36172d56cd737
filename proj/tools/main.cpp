#include <iostream>

#include "rbnc/cli.hpp"

int main(int argc, char** argv) { return rbnc::cli::main(argc, argv, std::cout, std::cerr); }
