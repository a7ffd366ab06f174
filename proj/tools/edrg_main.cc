#include <edrg/cli.hh>

#include <iostream>

int main(int argc, char ** argv)
{
    return edrg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
