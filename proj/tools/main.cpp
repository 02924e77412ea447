#include "featbench/cli.hpp"

int main(int argc, char** argv) { return featbench::run_cli(argc, argv); }
