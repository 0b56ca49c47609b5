#include "knotshadow/cli.hpp"

int main(int argc, char** argv) { return knotshadow::cli::run(argc, argv); }
