#include "cpa/cli.hpp"

int main(int argc, char** argv) { return cpa::cli::run(argc, argv); }
