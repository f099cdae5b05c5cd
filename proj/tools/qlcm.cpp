#include <iostream>

#include "qlcm/cli.hpp"

int main(int argc, char** argv) { return qlcm::cli::run(argc, argv, std::cout, std::cerr); }
