#include <iostream>

#include "gsp4/cli.hpp"

int main(int argc, char** argv) { return gsp4::run_command(argc, argv, std::cout, std::cerr); }
