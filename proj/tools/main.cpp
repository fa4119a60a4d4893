#include "tarski/cli.hpp"

int main(int argc, char** argv) { return tarski::cli::main(argc, argv); }
