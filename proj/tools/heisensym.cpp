#include <iostream>

#include "heisensym/cli.hpp"

int main(int argc, char** argv) { return heisensym::run_cli(argc, argv, std::cout, std::cerr); }
