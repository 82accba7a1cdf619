#include <iostream>

#include "chroma_cli/app.hpp"

int main(int argc, char** argv) { return chroma::cli::run(argc, argv, std::cout, std::cerr); }
