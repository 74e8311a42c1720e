#include "logrank/cli/app.hpp"

int main(int argc, char** argv) { return logrank::run_cli(argc, argv); }
