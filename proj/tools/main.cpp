#include "cli.hpp"

int main(int argc, char **argv) { return permblocks::cli::run(argc, argv); }
