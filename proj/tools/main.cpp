#include <iostream>

#include "orthosum/cli.hpp"

int main(int argc, char** argv) { return orthosum::cli::run(argc, argv, std::cout, std::cerr); }
