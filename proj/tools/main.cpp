#include "hopfcm/cli.hpp"

int main(int argc, char** argv) { return hopfcm::cli::run(argc, argv); }
