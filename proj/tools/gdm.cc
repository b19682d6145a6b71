/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return gdm::run(argc, argv, std::cout, std::cerr);
}
