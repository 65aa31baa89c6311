#include <iostream>

#include "starics/export.hpp"

int main(int argc, char** argv) { return starics::run_cli(argc, argv, std::cout, std::cerr); }
