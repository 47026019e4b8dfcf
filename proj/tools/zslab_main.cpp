#include "zslab/cli.hpp"

int main(int argc, char** argv) { return zslab::run_cli(argc, argv); }
