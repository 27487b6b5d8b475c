#include <iostream>

#include "focq/cli.hpp"

int main(int argc, char** argv) { return focq::cli::main(argc, argv, std::cout, std::cerr); }
