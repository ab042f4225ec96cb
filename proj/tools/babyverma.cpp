#include <iostream>

#include "babyverma/cli.hpp"

int main(int argc, char** argv) { return bv::cli::run(argc, argv, std::cout, std::cerr); }
