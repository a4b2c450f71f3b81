#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    cotlsa::cli::Environment env;
    env.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return cotlsa::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr, env);
}
