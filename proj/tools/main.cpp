#include "contests/cli.hpp"

int main(int argc, char** argv) { return contests::run_cli(argc, argv); }
