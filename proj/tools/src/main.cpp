#include <iostream>

#include "nfftlab/cli.hpp"

int main(int argc, char** argv) { return nfftlab::cli::run(argc, argv, std::cout, std::cerr); }
