#include "cmfactor/cli.hpp"

int main(int argc, char ** argv) { return cmf::cli::run(argc, argv); }
