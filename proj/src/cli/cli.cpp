#include "deckscan/cli.hpp"

#include <cstdio>

namespace deckscan::cli {

int run(int, char**) {
    std::fprintf(stderr, "deckscan: no subcommands wired up yet\n");
    return 2;
}

}  // namespace deckscan::cli
