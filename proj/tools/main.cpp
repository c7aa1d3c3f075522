#include <iostream>

#include "straightlaw/commands.hpp"

int main(int argc, char** argv) { return straightlaw::cli::run(argc, argv, std::cout, std::cerr); }
