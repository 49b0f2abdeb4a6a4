#include <iostream>

#include "aspectra/cli.hpp"

int main(int argc, char** argv) { return aspectra::run_cli(argc, argv, std::cout, std::cerr); }
