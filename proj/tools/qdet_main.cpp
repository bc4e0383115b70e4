#include "qdet/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = qdet::cli::run_command(args);
  std::cout << result.output;
  if (result.status == qdet::cli::Status::Error) {
    std::cerr << "qdet: " << result.message << "\n";
  }
  return result.exit_code;
}
