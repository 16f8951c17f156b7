#include <iostream>

#include "taylorcert/cli/commands.hpp"

int main(int argc, char** argv) { return taylorcert::cli::run_main(argc, argv, std::cout, std::cerr); }
