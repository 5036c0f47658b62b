#include "toupie/cli.hpp"

int main(int argc, char** argv) { return toupie::cli_main(argc, argv); }
