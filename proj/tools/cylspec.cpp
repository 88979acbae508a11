#include <iostream>

#include "cylspec/cli/app.hpp"

int main(int argc, char** argv) { return cylspec::cli::run_cli(argc, argv, std::cout, std::cerr); }
