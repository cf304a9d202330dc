#include "sincivp/cli.hpp"

int main(int argc, char** argv) { return sincivp::run_cli(argc, argv); }
