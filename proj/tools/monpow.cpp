#include <iostream>

#include <monpow/cli.hpp>

int main(int argc, char **argv)
{
    return monpow::run_cli(argc, argv, std::cout, std::cerr);
}
