#include <trias/cli.hpp>

int main(int argc, char** argv) { return trias::cli::run(argc, argv); }
