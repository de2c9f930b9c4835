#include <iostream>

#include "lcdkit/cli.hpp"

int main(int argc, char** argv) { return lcdkit::cli::run(argc, argv, std::cout, std::cerr); }
