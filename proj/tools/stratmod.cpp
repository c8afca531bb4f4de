#include <iostream>

#include "stratmod/cli.hpp"

int main(int argc, char **argv) { return stratmod::cli::main_entry(argc, argv, std::cout); }
