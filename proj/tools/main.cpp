#include "ordproj/cli.hpp"

int main(int argc, char** argv) { return ordproj::run_cli(argc, argv); }
