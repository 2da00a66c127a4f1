#include <iostream>

#include "homcolor/cli.hpp"

int main(int argc, char** argv) { return homcolor::run_cli(argc, argv, std::cout, std::cerr); }
