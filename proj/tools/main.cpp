#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return omnihex::cli::run_cli(argc, argv, std::cout, std::cerr); }
