#include <iostream>

#include "lemon/cli.hpp"

int main(int argc, char** argv) { return lemon::cli_main(argc, argv, std::cout, std::cerr); }
