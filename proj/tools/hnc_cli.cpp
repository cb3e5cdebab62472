#include <iostream>

#include "hnc/cli.hpp"

int main(int argc, char** argv) { return hnc::cli::run(argc, argv, std::cout, std::cerr); }
