#include "b2dunkl/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return b2dunkl::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
