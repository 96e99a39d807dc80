#include <iostream>

#include "qh/cli.hpp"

int main(int argc, char** argv) { return qh::cli_main(argc, argv, std::cout, std::cerr); }
