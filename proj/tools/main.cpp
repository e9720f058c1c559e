#include <iostream>

#include "cli.hpp"
#include "oscalg/error.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  oscalg::cli::RunConfig config;
  try {
    config = oscalg::cli::parse_args(args);
  } catch (const oscalg::cli::HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const oscalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return oscalg::cli::run(config, std::cout, std::cerr);
}
