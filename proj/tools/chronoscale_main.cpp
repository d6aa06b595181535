#include "chronoscale/runconfig.hpp"

int main(int argc, char** argv) { return chronoscale::run_main(argc, argv); }
