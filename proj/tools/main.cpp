#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    tdp::cli::Runner runner(std::cout, std::cerr, std::cin);
    return runner.run(std::move(args));
}
