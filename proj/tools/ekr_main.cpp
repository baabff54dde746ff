#include <iostream>

#include "ekr/cli.hpp"

int main(int argc, char** argv) { return ekr::run_cli(argc, argv, std::cout, std::cerr); }
