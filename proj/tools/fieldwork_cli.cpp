#include "cli.hpp"

int main(int argc, char** argv) { return fieldwork::cli::run(argc, argv); }
