#include <iostream>

#include "torusforge/cli.hpp"

int main(int argc, char** argv) { return torusforge::dispatch(argc, argv, std::cout, std::cerr); }
