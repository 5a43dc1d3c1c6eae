#include <iostream>

#include "multitime/cli.hpp"

int main(int argc, char** argv) { return multitime::cli::run(argc, argv, std::cout, std::cerr); }
