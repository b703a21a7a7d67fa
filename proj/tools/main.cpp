#include <iostream>

#include "chaoscrypt/cli.hpp"

int main(int argc, char** argv) { return chaoscrypt::run_cli(argc, argv, std::cout, std::cerr); }
