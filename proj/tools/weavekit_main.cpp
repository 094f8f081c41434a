#include <iostream>

#include "weavekit/cli.hpp"

int main(int argc, char** argv) { return weavekit::cli_main(argc, argv, std::cout, std::cerr); }
