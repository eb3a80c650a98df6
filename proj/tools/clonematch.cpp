#include "clonematch/cli.hpp"

int main(int argc, char** argv) { return clonematch::cli_main(argc, argv); }
