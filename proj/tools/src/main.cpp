#include <iostream>

#include "p2leaf/cli.hpp"

int main(int argc, char** argv) { return p2leaf::run_cli(argc, argv, std::cout, std::cerr); }
