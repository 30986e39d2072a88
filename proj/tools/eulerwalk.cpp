#include <iostream>

#include "eulerwalk/cli.hpp"

int main(int argc, char** argv) {
  using namespace eulerwalk;
  try {
    const auto config = cli::parse_args(argc, argv, std::cout);
    if (!config) return cli::kExitOk;
    return cli::run(*config, std::cout, std::cerr);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }
}
