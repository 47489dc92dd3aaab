// Command-line front end; subcommands are registered in src/cli.
#include "deckscan/cli.hpp"

int main(int argc, char** argv) { return deckscan::cli::run(argc, argv); }
