#include <iostream>

#include "drpslte/cli.hpp"

int main(int argc, char** argv) {
    return drpslte::run_cli(argc, argv, std::cout, std::cerr);
}
