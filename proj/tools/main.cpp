#include "cli_app.hpp"

int main(int argc, char** argv) { return bellsta::cli::run(argc, argv); }
