#include "kcenter/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return kcenter::cli::run(argc, argv, std::cout, std::cerr); }
