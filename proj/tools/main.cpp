#include <iostream>

#include "ovt/cli.hpp"

int main(int argc, char** argv) { return ovt::cli::run(argc, argv, std::cout, std::cerr); }
