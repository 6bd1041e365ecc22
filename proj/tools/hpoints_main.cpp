#include "hilb/cli.hpp"

int main(int argc, char** argv) { return hilb::run_cli(argc, argv); }
