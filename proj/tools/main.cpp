#include "momentkit/cli.hpp"

int main(int argc, char** argv) { return momentkit::run_main(argc, argv); }
