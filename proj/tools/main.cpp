#include <iostream>

#include "cosetlab/app.hpp"

int main(int argc, char** argv) { return cosetlab::cli_main(argc, argv, std::cout, std::cerr); }
