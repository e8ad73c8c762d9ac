#include <iostream>

#include "sym/cli.hpp"

int main(int argc, char** argv)
{
    return sym::cli::run(argc, argv, std::cout, std::cerr);
}
