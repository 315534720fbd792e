#include "bbwtilt/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bbwtilt::cli::run(argc, argv, std::cout, std::cerr); }
