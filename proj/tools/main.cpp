#include "cli.hpp"

int main(int argc, char** argv) { return lpa::cli::main(argc, argv); }
