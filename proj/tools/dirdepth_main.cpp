#include "dirdepth/cli.hpp"

int main(int argc, char** argv) { return dirdepth::cli::run(argc, argv); }
