#include "regrep/cli.hpp"

int main(int argc, char** argv) { return regrep::run_cli(argc, argv); }
