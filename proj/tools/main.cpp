#include <iostream>

#include "modkit_cli/app.hpp"

int main(int argc, char** argv) { return modkit::cli::run(argc, argv, std::cout, std::cerr); }
