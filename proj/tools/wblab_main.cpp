#include "wblab/cli/commands.hpp"

int main(int argc, char** argv) { return wblab::cli::run(argc, argv); }
