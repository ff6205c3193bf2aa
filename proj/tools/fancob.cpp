#include <iostream>

#include "fancob/cli.hpp"

int main(int argc, char** argv) { return fancob::run_cli({argv + 1, argv + argc}, std::cout, std::cerr); }
