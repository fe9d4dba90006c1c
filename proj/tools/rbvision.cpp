#include <iostream>
#include <string>
#include <vector>

#include "rbvision/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return rbvision::app::run(args, std::cout, std::cerr);
}
