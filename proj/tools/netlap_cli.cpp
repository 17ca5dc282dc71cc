#include <iostream>

#include "netlap/cli.hpp"

int main(int argc, char** argv) { return netlap::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
