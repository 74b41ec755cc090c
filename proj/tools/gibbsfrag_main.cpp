#include <iostream>

#include "gibbsfrag/cli.hpp"

int main(int argc, char** argv) { return gibbsfrag::run_cli(argc, argv, std::cout, std::cerr); }
