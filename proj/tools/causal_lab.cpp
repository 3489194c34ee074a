#include "causal_lab/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  try {
    return causal_lab::cli::main_entry(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 1;
  }
}
