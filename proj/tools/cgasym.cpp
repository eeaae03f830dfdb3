#include <iostream>

#include "cgasym/cli.hpp"

int main(int argc, char** argv) { return cgasym::run_cli(argc, argv, std::cout, std::cerr); }
