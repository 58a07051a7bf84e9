#include "mvop/cli.hpp"

int main(int argc, char** argv) { return mvop::run(argc, argv); }
