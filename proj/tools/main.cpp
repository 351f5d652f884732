#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qaw::cli::run(argc, argv, std::cout, std::cerr); }
