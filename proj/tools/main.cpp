#include "antipodal/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return antipodal::run_cli(argc, argv, std::cout, std::cerr); }
