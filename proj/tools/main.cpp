#include <vector>

#include "orthocevia/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orthocevia::cli::run_cli(args);
}
