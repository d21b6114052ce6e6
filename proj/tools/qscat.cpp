#include "qscat/cli.hpp"

int main(int argc, char** argv) { return qscat::cli::run_cli(argc, argv); }
