#include <iostream>
#include <string>
#include <vector>

#include "pmv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pmv::CommandResult res = pmv::run_command(args);
    if (res.json) {
        std::cout << res.json->dump() << "\n";
    } else if (res.code == 2) {
        std::cerr << res.out;
    } else {
        std::cout << res.out;
    }
    return res.code;
}
