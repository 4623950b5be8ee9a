#include "tlagauge/cli/runner.hpp"

int main(int argc, char** argv) { return tlagauge::run_cli(argc, argv); }
