#include <iostream>

#include "cycloskew/cli.hpp"

int main(int argc, char** argv)
{
    return cycloskew::run_cli(argc, argv, std::cout, std::cerr);
}
