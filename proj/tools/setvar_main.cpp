#include <iostream>

#include "setvar/cli.hpp"

int main(int argc, char** argv) { return setvar::cli::run(argc, argv, std::cout, std::cerr); }
