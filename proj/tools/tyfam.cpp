#include <tyfam/cli.hpp>

int main(int argc, char** argv) { return tyfam::cli_main(argc, argv); }
