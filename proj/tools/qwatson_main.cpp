#include <iostream>

#include "qwatson/cli.hpp"

int main(int argc, char** argv) { return qwatson::run_cli(argc, argv, std::cout, std::cerr); }
