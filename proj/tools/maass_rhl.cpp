#include "maass/cli.hpp"

int main(int argc, char** argv) { return maass::run_cli(argc, argv); }
