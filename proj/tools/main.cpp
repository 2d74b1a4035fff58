#include <iostream>

#include "schemamap/harness.hpp"

int main(int argc, char** argv) { return schemamap::run(argc, argv, std::cout, std::cerr); }
