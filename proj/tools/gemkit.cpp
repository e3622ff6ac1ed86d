#include <iostream>

#include "gemkit/cli.hpp"

int main(int argc, char** argv) { return gemkit::run_cli(argc, argv, std::cout, std::cerr); }
