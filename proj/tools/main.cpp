#include "nskernel_cli/cli.hpp"

int main(int argc, char** argv) { return nskernel::cli::main_entry(argc, argv); }
