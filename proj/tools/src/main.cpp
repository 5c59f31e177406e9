#include <iostream>

#include "discarr_tools/commands.hpp"

int main(int argc, char** argv) { return discarr::tools::run_cli(argc, argv, std::cout, std::cerr); }
