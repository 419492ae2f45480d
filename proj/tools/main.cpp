#include <fstream>
#include <iostream>

#include "rwg/error.hpp"
#include "run_config.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const auto parsed = rwg::cli::parse_command_line(std::vector<std::string>(argv + 1, argv + argc));
  if (!parsed.config) {
    (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message;
    return parsed.exit_code;
  }
  const auto& config = *parsed.config;
  try {
    if (config.out.empty()) {
      rwg::cli::run(config, std::cout, std::cerr);
    } else {
      std::ofstream f(config.out);
      if (!f) {
        std::cerr << "error: cannot open " << config.out << "\n";
        return static_cast<int>(rwg::ErrorCode::kUsage);
      }
      rwg::cli::run(config, f, std::cerr);
    }
  } catch (const rwg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(rwg::ErrorCode::kNumeric);
  }
  return 0;
}
