#include "commands.hpp"

int main(int argc, char **argv) { return qh::cli::run(argc, argv); }
