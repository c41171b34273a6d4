#include <iostream>

#include "lgr/cli.hpp"

int main(int argc, char** argv) { return lgr::cli::run(argc, argv, std::cout, std::cerr); }
