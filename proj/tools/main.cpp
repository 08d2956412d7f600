#include "cli.hpp"

int main(int argc, char** argv) {
  return carlitz::cli::main_entry(argc, argv);
}
