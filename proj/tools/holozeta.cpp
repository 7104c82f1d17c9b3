#include <iostream>

#include "holozeta/cli.hpp"

int main(int argc, char** argv) { return holozeta::run_cli(argc, argv, std::cout, std::cerr); }
