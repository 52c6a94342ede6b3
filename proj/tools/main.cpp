#include <iostream>

#include "polyvdw/cli.hpp"

int main(int argc, char** argv)
{
    return polyvdw::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
