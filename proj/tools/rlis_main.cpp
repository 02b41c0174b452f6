#include "rlis/cli.hpp"

int main(int argc, char** argv) { return rlis::run_cli(argc, argv); }
