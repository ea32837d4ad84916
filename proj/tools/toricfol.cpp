#include "toricfol/cli.hpp"

int main(int argc, char** argv) { return toricfol::run_cli(argc, argv); }
