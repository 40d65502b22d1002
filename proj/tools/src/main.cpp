#include <iostream>

#include "powergraph/cli.hpp"

int main(int argc, char** argv) { return powergraph::cli::run(argc, argv, std::cout, std::cerr); }
