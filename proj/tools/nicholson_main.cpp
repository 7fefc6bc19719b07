#include <iostream>

#include "nicholson/cli.hpp"

int main(int argc, char** argv) { return nicholson::cli::run(argc, argv, std::cout, std::cerr); }
