#include <iostream>

#include "misgeo/commands.hpp"

int main(int argc, char** argv) { return misgeo::run_cli(argc, argv, std::cout, std::cerr); }
