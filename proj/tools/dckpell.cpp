#include <iostream>

#include "dckpell/cli.hpp"

int main(int argc, char** argv) { return dckpell::cli::run(argc, argv, std::cout, std::cerr); }
