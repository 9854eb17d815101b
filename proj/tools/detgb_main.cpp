#include "detgb/cli.hpp"

int main(int argc, char** argv) { return detgb::cli::run_main(argc, argv); }
