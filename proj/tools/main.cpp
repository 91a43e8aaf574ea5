#include <iostream>

#include "logratio/cli.hpp"

int main(int argc, char** argv) {
    return logratio::run_cli(argc, argv, std::cout, std::cerr);
}
