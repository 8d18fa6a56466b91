#include <iostream>

#include "multifluid/cli.hpp"

int main(int argc, char** argv) { return multifluid::cli::main_entry(argc, argv, std::cout, std::cerr); }
