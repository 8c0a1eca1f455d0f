#include "cli.hpp"

int main(int argc, char** argv) { return mskkt::cli::run(argc, argv); }
