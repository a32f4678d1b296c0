#include "geode/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return geode::run_cli(argc, argv, std::cout, std::cerr);
}
