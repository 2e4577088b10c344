#include "quatseq/cli.hpp"

int main(int argc, char** argv) { return quatseq::cli::main(argc, argv); }
