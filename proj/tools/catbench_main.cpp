#include "catbench/cli.hpp"

int main(int argc, char** argv) { return catbench::run_cli(argc, argv); }
